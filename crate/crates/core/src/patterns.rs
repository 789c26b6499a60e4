//! Induced-subgraph search, named graphs, seeded generators and exhaustive
//! enumeration of small graphs up to isomorphism.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("k-suns need k >= 3, got {k}")]
    SunTooSmall { k: usize },
    #[error("enumeration is limited to n <= {max}, got {n}")]
    EnumerationTooLarge { n: usize, max: usize },
}

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_N: usize = 8;
/// Largest `n` accepted by [`canonical_code`]; the code must fit in 64 bits.
pub const MAX_CANONICAL_N: usize = 11;

/// An induced embedding: pattern vertex `i` maps to host vertex `mapping[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    pub mapping: Vec<usize>,
}

impl Occurrence {
    pub fn vertices(&self) -> VertexSet {
        self.mapping.iter().copied().collect()
    }

    /// Re-checks injectivity plus preservation of edges and non-edges.
    pub fn is_induced_embedding(&self, host: &Graph, pattern: &Graph) -> bool {
        let m = &self.mapping;
        m.len() == pattern.n()
            && m.iter().all(|&v| v < host.n())
            && self.vertices().len() == m.len()
            && (0..m.len()).all(|i| {
                (i + 1..m.len()).all(|j| pattern.has_edge(i, j) == host.has_edge(m[i], m[j]))
            })
    }
}

/// First induced copy of `pattern` in `host`, or `None`.
///
/// Pattern vertices are placed in breadth-first order so each new vertex is
/// usually constrained by an already placed neighbor; host candidates are
/// tried in label order.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Occurrence> {
    let p = pattern.n();
    if p > host.n() {
        return None;
    }
    let order = bfs_order(pattern);
    let mut mapping = vec![usize::MAX; p];
    let mut used = VertexSet::with_capacity(host.n());
    if extend(host, pattern, &order, 0, &mut mapping, &mut used) {
        Some(Occurrence { mapping })
    } else {
        None
    }
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            for y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
            i += 1;
        }
    }
    order
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    let Some(&pv) = order.get(depth) else {
        return true;
    };
    let need = pattern.degree(pv);
    for hv in 0..host.n() {
        if used.contains(hv) || host.degree(hv) < need {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(pv, q) == host.has_edge(hv, mapping[q]));
        if !consistent {
            continue;
        }
        mapping[pv] = hv;
        used.insert(hv);
        if extend(host, pattern, order, depth + 1, mapping, used) {
            return true;
        }
        used.remove(hv);
    }
    mapping[pv] = usize::MAX;
    false
}

/// Shortest induced cycle of length at least 5; the mapping lists it in
/// cycle order.
pub fn find_hole(host: &Graph) -> Option<Occurrence> {
    (5..=host.n()).find_map(|k| find_induced(host, &gen_cycle(k)))
}

/// Complement of a hole. The mapping follows the cycle order of the hole in
/// the complement.
pub fn find_antihole(host: &Graph) -> Option<Occurrence> {
    find_hole(&host.complement())
}

/// Incomplete k-sun: `U = 0..k`, `W = k..2k`, `W` independent and `w_i`
/// adjacent to `u_j` iff `i = j` or `i = j + 1 (mod k)`. `U` has no edges.
pub fn incomplete_k_sun(k: usize) -> Result<Graph, PatternError> {
    if k < 3 {
        return Err(PatternError::SunTooSmall { k });
    }
    let mut edges = Vec::with_capacity(2 * k);
    for i in 0..k {
        edges.push((k + i, i));
        edges.push((k + i, (i + k - 1) % k));
    }
    Ok(Graph::from_edges(2 * k, &edges).expect("labels are in range"))
}

/// k-sun: an incomplete k-sun whose `U` is a clique.
pub fn k_sun(k: usize) -> Result<Graph, PatternError> {
    let spokes = incomplete_k_sun(k)?;
    let mut edges = spokes.edges();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    Ok(Graph::from_edges(2 * k, &edges).expect("labels are in range"))
}

/// First induced k-sun with `3 <= k <= k_max`, smallest `k` first.
pub fn find_k_sun(host: &Graph, k_max: usize) -> Option<(usize, Occurrence)> {
    (3..=k_max.min(host.n() / 2)).find_map(|k| {
        let sun = k_sun(k).expect("k >= 3");
        find_induced(host, &sun).map(|occ| (k, occ))
    })
}

/// `C_n`; for `n < 3` this is the path on `n` vertices.
pub fn gen_cycle(n: usize) -> Graph {
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    if n >= 3 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, &edges).expect("labels are in range")
}

/// `P_n`: the path `0 - 1 - ... - (n-1)`.
pub fn gen_path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("labels are in range")
}

pub fn gen_complete(n: usize) -> Graph {
    Graph::empty(n).complement()
}

/// Star on `n` vertices: center `0`, leaves `1..n`.
pub fn gen_star(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges).expect("labels are in range")
}

/// Threshold graph from explicit choices: vertex `i + 1` is dominating when
/// `dominating[i]` holds and isolated otherwise. Vertex 0 starts alone.
pub fn threshold_from_choices(dominating: &[bool]) -> Graph {
    let n = dominating.len() + 1;
    let edges: Vec<_> = dominating
        .iter()
        .enumerate()
        .filter(|(_, &d)| d)
        .flat_map(|(i, _)| (0..=i).map(move |u| (u, i + 1)))
        .collect();
    Graph::from_edges(n, &edges).expect("labels are in range")
}

/// Seeded random threshold graph on `n >= 1` vertices.
pub fn gen_threshold(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let choices: Vec<bool> = (1..n.max(1)).map(|_| rng.gen_bool(0.5)).collect();
    threshold_from_choices(&choices)
}

/// Intersection graph of closed integer intervals `[l, r]`.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Graph {
    let n = intervals.len();
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (intervals[u], intervals[v]);
            if a.0 <= b.1 && b.0 <= a.1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("labels are in range")
}

/// Seeded random interval graph. Interval graphs are strongly chordal, so
/// this only samples that subclass.
pub fn gen_strongly_chordal(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = 3 * n.max(1) as i64;
    let intervals: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let l = rng.gen_range(0..span);
            let len = rng.gen_range(0..=span / 3);
            (l, l + len)
        })
        .collect();
    interval_graph(&intervals)
}

/// Seeded random quasi-threshold graph: each vertex is joined to all of its
/// ancestors in a random rooted forest.
pub fn gen_quasi_threshold(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut parent: Vec<Option<usize>> = Vec::with_capacity(n);
    let mut edges = vec![];
    for v in 0..n {
        let p = (v > 0 && rng.gen_bool(0.75)).then(|| rng.gen_range(0..v));
        parent.push(p);
        let mut cur = p;
        while let Some(a) = cur {
            edges.push((a, v));
            cur = parent[a];
        }
    }
    Graph::from_edges(n, &edges).expect("labels are in range")
}

/// Seeded `G(n, p)`.
pub fn gen_random(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("labels are in range")
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Canonical code of `g`: the numerically smallest adjacency word over all
/// vertex orders that list vertices by non-decreasing degree.
///
/// The word reads the upper triangle column by column,
/// `(0,1), (0,2), (1,2), (0,3), ...`, first pair most significant. Two
/// graphs get the same code iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= MAX_CANONICAL_N, "canonical codes need n <= {MAX_CANONICAL_N}");
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let mut search = CanonSearch {
        g,
        degrees,
        total_bits: pair_count(n),
        best: u64::MAX,
        order: Vec::with_capacity(n),
        used: vec![false; n],
    };
    search.run(0, 0);
    if n < 2 {
        0
    } else {
        search.best
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    degrees: Vec<usize>,
    total_bits: usize,
    best: u64,
    order: Vec<usize>,
    used: Vec<bool>,
}

impl CanonSearch<'_> {
    fn run(&mut self, pos: usize, prefix: u64) {
        let n = self.g.n();
        if pos == n {
            self.best = self.best.min(prefix);
            return;
        }
        for v in 0..n {
            if self.used[v] || self.g.degree(v) != self.degrees[pos] {
                continue;
            }
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | self.g.has_edge(u, v) as u64;
            }
            let bits = pair_count(pos + 1);
            if self.best != u64::MAX && code > self.best >> (self.total_bits - bits) {
                continue;
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(pos + 1, code);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Decodes a canonical code back into a graph on `n` vertices.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    let mut edges = vec![];
    let mut bit = total;
    for j in 1..n {
        for i in 0..j {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("labels are in range")
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    graph_from_code(g.n(), canonical_code(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, sorted by canonical code.
///
/// Classes on `n` vertices are grown from those on `n - 1` by adding a
/// vertex with every possible neighborhood, then deduplicated by code.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, PatternError> {
    if n > MAX_ENUMERATION_N {
        return Err(PatternError::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(size - 1, code);
            let base_edges = base.edges();
            for mask in 0u64..1 << (size - 1) {
                let mut edges = base_edges.clone();
                edges.extend(VertexSet::from_mask(mask).iter().map(|u| (u, size - 1)));
                let g = Graph::from_edges(size, &edges).expect("labels are in range");
                next.insert(canonical_code(&g));
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|code| graph_from_code(n, code)).collect())
}

/// All classes with `1 <= n <= max_n`.
pub fn enumerate_up_to(max_n: usize) -> Result<Vec<Graph>, PatternError> {
    let mut all = vec![];
    for n in 1..=max_n {
        all.extend(enumerate_graphs(n)?);
    }
    Ok(all)
}
