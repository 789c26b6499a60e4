//! Exact exponential-time reference computations.
//!
//! Nothing here touches the neighborhood DAG or the matching code; these are
//! the independent answers the fast paths are checked against. Intended for
//! small graphs only (see the per-function size notes).

use serde::{Deserialize, Serialize};

use crate::classes::actual_edges;
use crate::graph::{Graph, VertexSet};

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically. The empty graph has no maximal cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    for v in p.difference(g.neighbors(pivot)).to_vec() {
        let mut r2 = r.clone();
        r2.insert(v);
        bron_kerbosch(
            g,
            r2,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// `ω(G)` by branch and bound. Practical up to roughly 20 vertices.
pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    grow_clique(g, 0, g.vertices(), &mut best);
    best
}

fn grow_clique(g: &Graph, size: usize, mut candidates: VertexSet, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    while let Some(v) = candidates.first() {
        if size + candidates.len() <= *best {
            return;
        }
        candidates.remove(v);
        grow_clique(g, size + 1, candidates.intersection(g.neighbors(v)), best);
    }
}

/// `α(G) = ω(Ḡ)`.
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

/// `χ(G)`: smallest `k` admitting a proper coloring, by backtracking with
/// color-symmetry breaking. Practical up to roughly 16 vertices.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![0usize; n];
    (1..=n)
        .find(|&k| color_with(g, &order, 0, 0, k, &mut colors))
        .unwrap_or(n)
}

fn color_with(
    g: &Graph,
    order: &[usize],
    pos: usize,
    used: usize,
    k: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&v) = order.get(pos) else {
        return true;
    };
    for c in 1..=(used + 1).min(k) {
        if g.neighbors(v).iter().all(|u| colors[u] != c) {
            colors[v] = c;
            if color_with(g, order, pos + 1, used.max(c), k, colors) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// `λ(G)` by exhaustive set-partition search: the fewest classes such that
/// closed neighborhoods inside each class are pairwise comparable.
/// Practical up to roughly 10 vertices.
pub fn brute_lambda(g: &Graph) -> usize {
    let n = g.n();
    let comparable: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.closed(u).comparable(g.closed(v))).collect())
        .collect();
    let mut best = n;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    partition(0, &comparable, &mut classes, &mut best);
    best
}

fn partition(v: usize, comparable: &[Vec<bool>], classes: &mut Vec<Vec<usize>>, best: &mut usize) {
    if v == comparable.len() {
        *best = (*best).min(classes.len());
        return;
    }
    for i in 0..classes.len() {
        if classes[i].iter().all(|&u| comparable[u][v]) {
            classes[i].push(v);
            partition(v + 1, comparable, classes, best);
            classes[i].pop();
        }
    }
    if classes.len() + 1 < *best {
        classes.push(vec![v]);
        partition(v + 1, comparable, classes, best);
        classes.pop();
    }
}

/// `χ, ω, α, λ` of one graph, all by exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphNumbers {
    pub chi: usize,
    pub omega: usize,
    pub alpha: usize,
    pub lambda: usize,
}

impl GraphNumbers {
    pub fn of(g: &Graph) -> Self {
        GraphNumbers {
            chi: brute_chromatic(g),
            omega: clique_number(g),
            alpha: independence_number(g),
            lambda: brute_lambda(g),
        }
    }
}

/// An induced subgraph on which a hereditary equality fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetWitness {
    /// Vertices of the induced subgraph, in the host's labels.
    pub subset: Vec<usize>,
    /// Left-hand side of the failed equality (e.g. `χ(G_A)`).
    pub left: usize,
    /// Right-hand side of the failed equality (e.g. `λ(Ḡ_A)`).
    pub right: usize,
}

/// Result of a hereditary membership test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Membership {
    pub holds: bool,
    pub witness: Option<SubsetWitness>,
}

/// Bitmasks over `n` vertices ordered by popcount, then lexicographically by
/// sorted member list.
pub fn subsets_by_size(n: usize) -> Vec<u64> {
    assert!(n < 32, "subset sweep over {n} vertices is not supported");
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    // among equal-size sets, a lexicographically smaller member list has the
    // larger bit-reversed mask
    masks.sort_by_key(|&m| (m.count_ones(), std::cmp::Reverse(m.reverse_bits())));
    masks
}

/// Checks `left(G_A) == right(G_A)` on every induced subgraph, returning the
/// first failure in [`subsets_by_size`] order.
pub fn hereditary_check(
    g: &Graph,
    left: impl Fn(&Graph) -> usize,
    right: impl Fn(&Graph) -> usize,
) -> Membership {
    for mask in subsets_by_size(g.n()) {
        let sub = g.induced_by_mask(mask);
        let (l, r) = (left(&sub), right(&sub));
        if l != r {
            return Membership {
                holds: false,
                witness: Some(SubsetWitness {
                    subset: VertexSet::from_mask(mask).to_vec(),
                    left: l,
                    right: r,
                }),
            };
        }
    }
    Membership {
        holds: true,
        witness: None,
    }
}

/// Co-linear: `χ(G_A) = λ(Ḡ_A)` for every `A ⊆ V`. Witness reports `χ` then `λ`.
pub fn is_colinear(g: &Graph) -> Membership {
    hereditary_check(g, brute_chromatic, |sub| brute_lambda(&sub.complement()))
}

/// Linear: `α(G_A) = λ(G_A)` for every `A ⊆ V`. Witness reports `α` then `λ`.
pub fn is_linear(g: &Graph) -> Membership {
    hereditary_check(g, independence_number, brute_lambda)
}

/// Linear as the complement of co-linear; agrees with [`is_linear`].
pub fn is_linear_via_complement(g: &Graph) -> bool {
    is_colinear(&g.complement()).holds
}

/// The graph `F` on `V(G)` whose edges are those of `G` together with the
/// actual edges of `Ḡ`: exactly the pairs that must get distinct colors in
/// any linear coloring of `Ḡ`.
pub fn forced_pairs_graph(g: &Graph) -> Graph {
    let mut edges = g.edges();
    edges.extend(actual_edges(&g.complement()));
    Graph::from_edges(g.n(), &edges).expect("edges come from a graph on the same vertices")
}

/// Co-linear recognized through `χ(G_A) = ω(F_A)` where `F_A` is built on
/// each induced subgraph. Agrees with [`is_colinear`].
pub fn colinear_via_actual_edges(g: &Graph) -> Membership {
    hereditary_check(g, brute_chromatic, |sub| clique_number(&forced_pairs_graph(sub)))
}
