//! Linear colorings and the linear chromatic number.
//!
//! A coloring is linear when, inside every color class, the closed
//! neighborhoods form a chain under inclusion. The optimum is obtained by
//! coloring each path of a minimum path cover of the neighborhood DAG with
//! its own color: paths of a transitive DAG are exactly chains of the
//! inclusion order.

use thiserror::Error;

use crate::dag::NeighborhoodDag;
use crate::graph::{Graph, VertexSet};
use crate::oracles::maximal_cliques;
use crate::path_cover::min_path_cover;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {got} entries but the graph has {n} vertices")]
    WrongLength { got: usize, n: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={n}")]
    ColorOutOfRange { vertex: usize, color: usize, n: usize },
}

/// Outcome of checking a coloring against the linearity condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Linear,
    /// Two same-colored vertices whose neighborhoods (or clique sets) are
    /// incomparable; the lexicographically first such pair.
    Violation(usize, usize),
}

impl Verdict {
    pub fn is_linear(self) -> bool {
        self == Verdict::Linear
    }
}

/// A surjective map from vertices onto colors `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearColoring {
    colors: Vec<usize>,
    k: usize,
}

impl LinearColoring {
    pub(crate) fn from_colors(colors: Vec<usize>) -> Self {
        let k = colors.iter().copied().max().unwrap_or(0);
        LinearColoring { colors, k }
    }

    /// Color of each vertex, 1-based.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Vertices of each color, indexed by `color - 1`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }
}

/// Optimal linear coloring: one color per path of a minimum path cover of
/// the neighborhood DAG, numbered in path order.
pub fn linear_color(g: &Graph) -> LinearColoring {
    let cover = min_path_cover(&NeighborhoodDag::build(g));
    let mut colors = vec![0; g.n()];
    for (i, path) in cover.paths().iter().enumerate() {
        for &v in path {
            colors[v] = i + 1;
        }
    }
    LinearColoring {
        colors,
        k: cover.rho(),
    }
}

/// `λ(G)`; zero for the empty graph.
pub fn linear_chromatic_number(g: &Graph) -> usize {
    linear_color(g).k()
}

fn check_coloring(g: &Graph, coloring: &[usize]) -> Result<(), ColoringError> {
    let n = g.n();
    if coloring.len() != n {
        return Err(ColoringError::WrongLength {
            got: coloring.len(),
            n,
        });
    }
    match coloring.iter().position(|&c| c == 0 || c > n) {
        Some(vertex) => Err(ColoringError::ColorOutOfRange {
            vertex,
            color: coloring[vertex],
            n,
        }),
        None => Ok(()),
    }
}

fn first_violation(
    coloring: &[usize],
    comparable: impl Fn(usize, usize) -> bool,
) -> Verdict {
    let n = coloring.len();
    for u in 0..n {
        for v in u + 1..n {
            if coloring[u] == coloring[v] && !comparable(u, v) {
                return Verdict::Violation(u, v);
            }
        }
    }
    Verdict::Linear
}

/// Checks that every color class is a chain of closed neighborhoods.
pub fn verify_linear_coloring(g: &Graph, coloring: &[usize]) -> Result<Verdict, ColoringError> {
    check_coloring(g, coloring)?;
    Ok(first_violation(coloring, |u, v| g.closed(u).comparable(g.closed(v))))
}

/// Same check phrased on clique sets: `C(v)` is the set of maximal cliques
/// containing `v`. Exponential in the worst case; meant for small graphs.
pub fn verify_linear_coloring_cliquesets(
    g: &Graph,
    coloring: &[usize],
) -> Result<Verdict, ColoringError> {
    check_coloring(g, coloring)?;
    let clique_sets = clique_sets(g);
    Ok(first_violation(coloring, |u, v| {
        clique_sets[u].comparable(&clique_sets[v])
    }))
}

/// For each vertex, the indices (into [`maximal_cliques`]) of the maximal
/// cliques containing it.
pub fn clique_sets(g: &Graph) -> Vec<VertexSet> {
    let mut sets = vec![VertexSet::new(); g.n()];
    for (i, clique) in maximal_cliques(g).iter().enumerate() {
        for v in clique {
            sets[v].insert(i);
        }
    }
    sets
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::brute_lambda;
    use crate::patterns::{gen_complete, gen_cycle, gen_path};

    #[test]
    fn linear_color_examples() {
        let c = linear_color(&gen_cycle(5));
        assert_eq!(c.k(), 5);
        assert_eq!(c.colors(), &[1, 2, 3, 4, 5]);

        assert_eq!(linear_color(&gen_complete(6)).k(), 1);

        let p4 = gen_path(4);
        assert_eq!(brute_lambda(&p4), 2);
        let c = linear_color(&p4);
        assert_eq!(c.k(), 2);
        assert_eq!(c.classes(), vec![[0, 1].into_iter().collect(), [2, 3].into_iter().collect()]);
    }

    #[test]
    fn chromatic_number_examples() {
        assert_eq!(linear_chromatic_number(&gen_cycle(4)), 4);
        for n in 5..10 {
            assert_eq!(linear_chromatic_number(&gen_cycle(n)), n);
        }
        let two_k2 = gen_cycle(4).complement();
        assert_eq!(brute_lambda(&two_k2), 2);
        assert_eq!(linear_chromatic_number(&two_k2), 2);
        assert_eq!(linear_chromatic_number(&Graph::empty(0)), 0);
    }

    #[test]
    fn verify_examples() {
        let c4 = gen_cycle(4);
        assert_eq!(verify_linear_coloring(&c4, &[1, 2, 3, 4]), Ok(Verdict::Linear));
        assert_eq!(verify_linear_coloring(&c4, &[1, 1, 2, 3]), Ok(Verdict::Violation(0, 1)));
        assert_eq!(verify_linear_coloring(&gen_complete(3), &[1, 1, 1]), Ok(Verdict::Linear));
    }

    #[test]
    fn verify_rejects_malformed_colorings() {
        let c4 = gen_cycle(4);
        assert_eq!(
            verify_linear_coloring(&c4, &[1, 2, 3]),
            Err(ColoringError::WrongLength { got: 3, n: 4 })
        );
        assert_eq!(
            verify_linear_coloring(&c4, &[1, 0, 1, 1]),
            Err(ColoringError::ColorOutOfRange { vertex: 1, color: 0, n: 4 })
        );
        assert!(verify_linear_coloring_cliquesets(&c4, &[1, 2, 3, 9]).is_err());
    }

    #[test]
    fn verify_cliquesets_examples() {
        let p3 = gen_path(3);
        assert_eq!(verify_linear_coloring_cliquesets(&p3, &[1, 1, 2]), Ok(Verdict::Linear));
        let c4 = gen_cycle(4);
        assert_eq!(
            verify_linear_coloring_cliquesets(&c4, &[1, 2, 1, 3]),
            Ok(Verdict::Violation(0, 2))
        );
        assert_eq!(
            verify_linear_coloring_cliquesets(&gen_complete(4), &[1, 1, 1, 1]),
            Ok(Verdict::Linear)
        );
    }
}
