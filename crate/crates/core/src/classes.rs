//! Recognition of chordal, co-chordal, split, threshold, quasi-threshold and
//! strongly chordal graphs, plus the simplicial/simple vertex predicates.

use serde::{Deserialize, Serialize};

use crate::graph::{check_permutation, Graph, GraphError, VertexSet};
use crate::oracles::subsets_by_size;
use crate::patterns::{find_induced, find_k_sun, gen_cycle, gen_path, Occurrence};

/// Edges `uv` (with `u < v`) whose endpoints have incomparable closed
/// neighborhoods.
pub fn actual_edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| !g.closed(u).comparable(g.closed(v)))
        .collect()
}

fn two_k2() -> Graph {
    Graph::from_edges(4, &[(0, 1), (2, 3)]).expect("static pattern")
}

/// First forbidden pattern (by position in `patterns`) that occurs induced.
fn first_forbidden(g: &Graph, patterns: &[(&'static str, Graph)]) -> Option<(&'static str, Occurrence)> {
    patterns
        .iter()
        .find_map(|(name, p)| find_induced(g, p).map(|occ| (*name, occ)))
}

/// Quasi-threshold: no induced `P4` and no induced `C4`.
pub fn is_quasi_threshold(g: &Graph) -> bool {
    first_forbidden(g, &[("P4", gen_path(4)), ("C4", gen_cycle(4))]).is_none()
}

/// Quasi-threshold via actual edges: no induced subgraph has an actual edge.
/// Exponential; for cross-checking [`is_quasi_threshold`] on small graphs.
pub fn is_quasi_threshold_by_actual_edges(g: &Graph) -> bool {
    subsets_by_size(g.n())
        .into_iter()
        .all(|mask| actual_edges(&g.induced_by_mask(mask)).is_empty())
}

/// Threshold: `(2K2, P4, C4)`-free.
pub fn is_threshold(g: &Graph) -> bool {
    first_forbidden(
        g,
        &[("2K2", two_k2()), ("P4", gen_path(4)), ("C4", gen_cycle(4))],
    )
    .is_none()
}

/// Split: `(2K2, C4, C5)`-free.
pub fn is_split(g: &Graph) -> bool {
    first_forbidden(
        g,
        &[("2K2", two_k2()), ("C4", gen_cycle(4)), ("C5", gen_cycle(5))],
    )
    .is_none()
}

pub fn is_p6_free(g: &Graph) -> bool {
    find_induced(g, &gen_path(6)).is_none()
}

/// Lexicographic breadth-first search order, ties broken toward the lowest
/// label. Uses plain label vectors compared lexicographically, which is
/// quadratic but ample at this scale.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| labels[a].cmp(&labels[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Outcome of chordality testing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination ordering: every vertex's later neighbors form a clique.
    Chordal(Vec<usize>),
    /// A chordless cycle on at least four vertices, in cycle order.
    Hole(Vec<usize>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

/// Chordality by Lex-BFS: the reverse visiting order is a perfect
/// elimination ordering iff the graph is chordal.
pub fn chordality(g: &Graph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_ordering(g, &peo) {
        Chordality::Chordal(peo)
    } else {
        Chordality::Hole(find_chordless_cycle(g).expect("a non-chordal graph has a hole"))
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_chordal()
}

pub fn is_co_chordal(g: &Graph) -> bool {
    is_chordal(&g.complement())
}

/// Checks that each vertex's neighbors later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if check_permutation(order, n).is_err() {
        return false;
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: VertexSet = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        // only the earliest later neighbor needs to see the rest
        match later.iter().min_by_key(|&u| pos[u]) {
            None => true,
            Some(p) => later.difference(g.closed(p)).is_empty(),
        }
    })
}

/// A chordless cycle of length at least 4, or `None` for chordal graphs.
///
/// For each vertex `v` and non-adjacent neighbors `a`, `b`, a shortest
/// `a`–`b` path avoiding the rest of `N[v]` closes a chordless cycle through
/// `v`. Every hole arises this way from any of its vertices.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nb = g.neighbors(v).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a, b) {
                    continue;
                }
                let mut blocked = g.closed(v).clone();
                blocked.remove(a);
                blocked.remove(b);
                if let Some(path) = shortest_path_avoiding(g, a, b, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path_avoiding(g: &Graph, from: usize, to: usize, blocked: &VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[from] = from;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if prev[y] == usize::MAX && !blocked.contains(y) {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// `N[v]` induces a clique.
pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_clique(g.closed(v))
}

/// `{N[x] : x ∈ N[v]}` is a chain under inclusion.
pub fn is_simple(g: &Graph, v: usize) -> bool {
    let members = g.closed(v).to_vec();
    members.iter().enumerate().all(|(i, &x)| {
        members[i + 1..]
            .iter()
            .all(|&y| g.closed(x).comparable(g.closed(y)))
    })
}

/// Outcome of greedy simple-vertex elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrongChordality {
    /// Removal sequence; each vertex was simple in what remained.
    StronglyChordal(Vec<usize>),
    /// The remaining vertices once no simple vertex is left.
    Stuck(VertexSet),
}

impl StrongChordality {
    pub fn is_strongly_chordal(&self) -> bool {
        matches!(self, StrongChordality::StronglyChordal(_))
    }
}

/// Repeatedly deletes the lowest-labeled simple vertex. Since strong
/// chordality is hereditary and every strongly chordal graph has a simple
/// vertex, the graph empties iff it is strongly chordal.
pub fn strong_chordality(g: &Graph) -> StrongChordality {
    let mut remaining: Vec<usize> = (0..g.n()).collect();
    let mut sequence = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        let sub = g.induced_by_list(&remaining);
        match (0..sub.n()).find(|&i| is_simple(&sub, i)) {
            Some(i) => sequence.push(remaining.remove(i)),
            None => return StrongChordality::Stuck(remaining.into_iter().collect()),
        }
    }
    StrongChordality::StronglyChordal(sequence)
}

pub fn is_strongly_chordal(g: &Graph) -> bool {
    strong_chordality(g).is_strongly_chordal()
}

/// Strong perfect elimination ordering check: for every `i`, `v_i` is
/// simple in the suffix graph `G_i`, and within `N_{G_i}[v_i]` the closed
/// neighborhoods in `G_i` grow along the ordering.
pub fn verify_strong_peo(g: &Graph, sigma: &[usize]) -> Result<bool, GraphError> {
    check_permutation(sigma, g.n())?;
    for i in 0..sigma.len() {
        // suffix graph with local label j <-> sigma[i + j]
        let sub = g.induced_by_list(&sigma[i..]);
        if !is_simple(&sub, 0) {
            return Ok(false);
        }
        let members = sub.closed(0).to_vec();
        for (a, &l) in members.iter().enumerate() {
            for &k in &members[a..] {
                if !sub.closed(l).is_subset(sub.closed(k)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Largest k searched for a k-sun witness in [`ClassReport`].
pub const MAX_SUN_WITNESS_K: usize = 6;

/// Membership flags for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub chordal: bool,
    pub co_chordal: bool,
    pub split: bool,
    pub threshold: bool,
    pub quasi_threshold: bool,
    pub strongly_chordal: bool,
    pub p6_free: bool,
    pub witnesses: ClassWitnesses,
}

/// Certificates backing the flags in [`ClassReport`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ClassWitnesses {
    /// Perfect elimination ordering when chordal.
    pub perfect_elimination_ordering: Option<Vec<usize>>,
    /// Chordless cycle (length >= 4) when not chordal.
    pub hole: Option<Vec<usize>>,
    /// Simple-vertex elimination sequence when strongly chordal.
    pub simple_elimination: Option<Vec<usize>>,
    /// Vertices left once no simple vertex remains.
    pub strongly_chordal_obstruction: Option<Vec<usize>>,
    /// Induced k-sun inside a chordal but not strongly chordal graph.
    pub k_sun: Option<Vec<usize>>,
    /// Induced P6, if any.
    pub p6: Option<Vec<usize>>,
    /// Induced 2K2, if any.
    pub two_k2: Option<Vec<usize>>,
    /// Induced P4, if any.
    pub p4: Option<Vec<usize>>,
    /// Induced C4, if any.
    pub c4: Option<Vec<usize>>,
}

impl ClassReport {
    pub fn of(g: &Graph) -> Self {
        let mut w = ClassWitnesses::default();
        let chordal = match chordality(g) {
            Chordality::Chordal(peo) => {
                w.perfect_elimination_ordering = Some(peo);
                true
            }
            Chordality::Hole(cycle) => {
                w.hole = Some(cycle);
                false
            }
        };
        let strongly_chordal = match strong_chordality(g) {
            StrongChordality::StronglyChordal(seq) => {
                w.simple_elimination = Some(seq);
                true
            }
            StrongChordality::Stuck(rest) => {
                w.strongly_chordal_obstruction = Some(rest.to_vec());
                false
            }
        };
        if chordal && !strongly_chordal {
            w.k_sun = find_k_sun(g, (g.n() / 2).min(MAX_SUN_WITNESS_K)).map(|(_, occ)| occ.mapping);
        }
        let find = |p: &Graph| find_induced(g, p).map(|occ| occ.mapping);
        w.p6 = find(&gen_path(6));
        w.two_k2 = find(&two_k2());
        w.p4 = find(&gen_path(4));
        w.c4 = find(&gen_cycle(4));
        let (p4_free, c4_free) = (w.p4.is_none(), w.c4.is_none());
        ClassReport {
            chordal,
            co_chordal: is_co_chordal(g),
            split: w.two_k2.is_none() && c4_free && find(&gen_cycle(5)).is_none(),
            threshold: w.two_k2.is_none() && p4_free && c4_free,
            quasi_threshold: p4_free && c4_free,
            strongly_chordal,
            p6_free: w.p6.is_none(),
            witnesses: w,
        }
    }
}
