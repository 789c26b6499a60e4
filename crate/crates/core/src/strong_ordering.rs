//! Strong perfect elimination ordering with a built-in maximum independent
//! set, and the α-color linear coloring it induces on P6-free strongly
//! chordal graphs.
//!
//! The ordering is a variant of Farber's simple-vertex elimination: each
//! round takes *all* vertices simple in the current graph, emitting them one
//! at a time in an order minimal for an accumulated strict-inclusion order.
//! While emitting, a vertex joins the independent set when none of its
//! neighbors has joined before it.

use thiserror::Error;

use crate::classes::{is_p6_free, is_simple, strong_chordality, StrongChordality};
use crate::graph::{Graph, VertexSet};
use crate::linear_coloring::LinearColoring;
use crate::patterns::{find_induced, gen_path};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("graph is not strongly chordal; no simple vertex among {stuck:?}")]
    NotStronglyChordal { stuck: Vec<usize> },
    #[error("graph is not P6-free; induced P6 on {path:?}")]
    NotP6Free { path: Vec<usize> },
    #[error("no simple vertex of the current round is minimal among {remaining:?}")]
    NoMinimalSimpleVertex { remaining: Vec<usize> },
    #[error("ordering covers {got} vertices but the graph has {n}")]
    OrderingMismatch { got: usize, n: usize },
    #[error("vertex {vertex} was left uncolored")]
    UncoloredVertex { vertex: usize },
}

/// Output of [`strong_elimination_ordering`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingResult {
    pub sigma: Vec<usize>,
    pub independent: VertexSet,
    /// 1-based round in which each vertex was emitted.
    pub iteration_of: Vec<usize>,
}

impl OrderingResult {
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.sigma.len()];
        for (i, &v) in self.sigma.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Once a vertex that is not simple in `g` appears, every later vertex is
    /// also not simple in `g`.
    pub fn simple_vertices_lead(&self, g: &Graph) -> bool {
        let mut seen_non_simple = false;
        for &v in &self.sigma {
            let simple = is_simple(g, v);
            if seen_non_simple && simple {
                return false;
            }
            seen_non_simple |= !simple;
        }
        true
    }

    /// Every vertex outside the independent set is adjacent to an
    /// independent vertex placed before it.
    pub fn independent_set_dominates_forward(&self, g: &Graph) -> bool {
        let pos = self.positions();
        (0..g.n()).filter(|v| !self.independent.contains(*v)).all(|x| {
            self.independent
                .iter()
                .any(|i| pos[i] < pos[x] && g.has_edge(i, x))
        })
    }
}

/// Builds the ordering and independent set; rejects graphs that are not
/// strongly chordal.
pub fn strong_elimination_ordering(g: &Graph) -> Result<OrderingResult, OrderingError> {
    if let StrongChordality::Stuck(rest) = strong_chordality(g) {
        return Err(OrderingError::NotStronglyChordal {
            stuck: rest.to_vec(),
        });
    }

    let n = g.n();
    let mut remaining: Vec<usize> = (0..n).collect();
    // below[v] holds every u with u < v in the accumulated order
    let mut below: Vec<VertexSet> = vec![VertexSet::with_capacity(n); n];
    let mut sigma = Vec::with_capacity(n);
    let mut independent = VertexSet::with_capacity(n);
    let mut open = VertexSet::full(n);
    let mut iteration_of = vec![0; n];
    let mut round = 0;

    while !remaining.is_empty() {
        round += 1;
        let current = g.induced_by_list(&remaining);
        let mut simple: Vec<usize> = (0..current.n())
            .filter(|&i| is_simple(&current, i))
            .map(|i| remaining[i])
            .collect();

        while !simple.is_empty() {
            let current = g.induced_by_list(&remaining);
            for a in 0..current.n() {
                for b in 0..current.n() {
                    if current.closed(a).is_proper_subset(current.closed(b)) {
                        below[remaining[b]].insert(remaining[a]);
                    }
                }
            }
            let alive: VertexSet = remaining.iter().copied().collect();
            let Some(idx) = simple
                .iter()
                .position(|&v| below[v].is_disjoint(&alive))
            else {
                return Err(OrderingError::NoMinimalSimpleVertex { remaining });
            };
            let v = simple.remove(idx);
            remaining.retain(|&x| x != v);
            sigma.push(v);
            iteration_of[v] = round;
            if open.remove(v) {
                independent.insert(v);
                open = open.difference(g.neighbors(v));
            }
        }
    }

    Ok(OrderingResult {
        sigma,
        independent,
        iteration_of,
    })
}

/// Colors along the ordering: each not yet colored independent vertex opens
/// a new color and hands it to its uncolored neighbors later in the order.
///
/// Requires a P6-free strongly chordal graph; every vertex must end up
/// colored, which is reported as an error otherwise.
pub fn kappa_coloring(g: &Graph, ord: &OrderingResult) -> Result<LinearColoring, OrderingError> {
    let n = g.n();
    if ord.sigma.len() != n {
        return Err(OrderingError::OrderingMismatch {
            got: ord.sigma.len(),
            n,
        });
    }
    if let StrongChordality::Stuck(rest) = strong_chordality(g) {
        return Err(OrderingError::NotStronglyChordal {
            stuck: rest.to_vec(),
        });
    }
    if !is_p6_free(g) {
        let occ = find_induced(g, &gen_path(6)).expect("P6 present");
        return Err(OrderingError::NotP6Free { path: occ.mapping });
    }

    let pos = ord.positions();
    let mut colors = vec![0; n];
    let mut next = 0;
    for (i, &v) in ord.sigma.iter().enumerate() {
        if !ord.independent.contains(v) || colors[v] != 0 {
            continue;
        }
        next += 1;
        colors[v] = next;
        for u in g.neighbors(v) {
            if pos[u] > i && colors[u] == 0 {
                colors[u] = next;
            }
        }
    }
    if let Some(vertex) = colors.iter().position(|&c| c == 0) {
        return Err(OrderingError::UncoloredVertex { vertex });
    }
    Ok(LinearColoring::from_colors(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::verify_strong_peo;
    use crate::linear_coloring::verify_linear_coloring;
    use crate::oracles::independence_number;
    use crate::patterns::{gen_complete, gen_cycle, gen_star, k_sun};

    #[test]
    fn star_ordering() {
        let g = gen_star(4);
        let ord = strong_elimination_ordering(&g).unwrap();
        assert_eq!(ord.sigma, vec![1, 2, 3, 0]);
        assert_eq!(ord.independent.to_vec(), vec![1, 2, 3]);
        assert_eq!(ord.iteration_of, vec![2, 1, 1, 1]);
        assert_eq!(independence_number(&g), 3);
    }

    #[test]
    fn complete_ordering() {
        let ord = strong_elimination_ordering(&gen_complete(4)).unwrap();
        assert_eq!(ord.sigma, vec![0, 1, 2, 3]);
        assert_eq!(ord.independent.to_vec(), vec![0]);
    }

    #[test]
    fn path_ordering() {
        let g = gen_path(3);
        let ord = strong_elimination_ordering(&g).unwrap();
        assert_eq!(ord.sigma, vec![0, 2, 1]);
        assert_eq!(ord.independent.to_vec(), vec![0, 2]);
        assert_eq!(verify_strong_peo(&g, &ord.sigma), Ok(true));
        assert!(ord.simple_vertices_lead(&g));
        assert!(ord.independent_set_dominates_forward(&g));
    }

    #[test]
    fn rejects_non_strongly_chordal() {
        assert!(matches!(
            strong_elimination_ordering(&k_sun(3).unwrap()),
            Err(OrderingError::NotStronglyChordal { .. })
        ));
        assert!(matches!(
            strong_elimination_ordering(&gen_cycle(4)),
            Err(OrderingError::NotStronglyChordal { .. })
        ));
    }

    #[test]
    fn kappa_examples() {
        let p3 = gen_path(3);
        let c = kappa_coloring(&p3, &strong_elimination_ordering(&p3).unwrap()).unwrap();
        assert_eq!(c.colors(), &[1, 1, 2]);
        assert_eq!(c.k(), 2);

        let k5 = gen_complete(5);
        let c = kappa_coloring(&k5, &strong_elimination_ordering(&k5).unwrap()).unwrap();
        assert_eq!(c.k(), 1);

        let star = gen_star(4);
        let c = kappa_coloring(&star, &strong_elimination_ordering(&star).unwrap()).unwrap();
        assert_eq!(c.colors(), &[1, 1, 2, 3]);
        assert!(verify_linear_coloring(&star, c.colors()).unwrap().is_linear());
    }

    #[test]
    fn kappa_rejects_p6() {
        let p6 = gen_path(6);
        let ord = strong_elimination_ordering(&p6).unwrap();
        assert_eq!(
            kappa_coloring(&p6, &ord),
            Err(OrderingError::NotP6Free { path: vec![0, 1, 2, 3, 4, 5] })
        );
        let ord = strong_elimination_ordering(&gen_path(3)).unwrap();
        assert!(matches!(
            kappa_coloring(&p6, &ord),
            Err(OrderingError::OrderingMismatch { .. })
        ));
    }
}
