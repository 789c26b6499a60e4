//! Minimum vertex-disjoint path cover of a transitive DAG via bipartite matching.
//!
//! Each arc `u -> v` becomes a bipartite edge between the "out" copy of `u`
//! and the "in" copy of `v`. Every matched edge glues two vertices into the
//! same path, so the minimum number of paths is `n - |maximum matching|`.

use crate::dag::NeighborhoodDag;

/// A set of `(left, right)` pairs sharing no endpoint on either side.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Pairs sorted by left index.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Maximum-cardinality matching by repeated augmenting-path search.
///
/// Left vertices are processed in index order and each one's edges in input
/// order, so the result is a deterministic function of the input.
///
/// Panics if an edge endpoint is out of range.
pub fn max_bipartite_matching(
    left_count: usize,
    right_count: usize,
    edges: &[(usize, usize)],
) -> Matching {
    let mut adj = vec![Vec::new(); left_count];
    for &(l, r) in edges {
        assert!(
            l < left_count && r < right_count,
            "bipartite edge ({l}, {r}) out of range {left_count}x{right_count}"
        );
        adj[l].push(r);
    }

    let mut match_right: Vec<Option<usize>> = vec![None; right_count];
    let mut visited = vec![false; right_count];
    for l in 0..left_count {
        visited.iter_mut().for_each(|x| *x = false);
        augment(l, &adj, &mut match_right, &mut visited);
    }

    let mut pairs: Vec<(usize, usize)> = match_right
        .iter()
        .enumerate()
        .filter_map(|(r, l)| l.map(|l| (l, r)))
        .collect();
    pairs.sort_unstable();
    Matching { pairs }
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    match_right: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &r in &adj[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        let free = match match_right[r] {
            None => true,
            Some(other) => augment(other, adj, match_right, visited),
        };
        if free {
            match_right[r] = Some(l);
            return true;
        }
    }
    false
}

/// A partition of the DAG's vertices into directed paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCover {
    paths: Vec<Vec<usize>>,
}

impl PathCover {
    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    /// Number of paths.
    pub fn rho(&self) -> usize {
        self.paths.len()
    }

    /// Checks the cover against `dag`: every vertex on exactly one path and
    /// every consecutive pair an arc.
    pub fn is_valid_for(&self, dag: &NeighborhoodDag) -> bool {
        let mut seen = vec![false; dag.n()];
        for path in &self.paths {
            if path.is_empty() {
                return false;
            }
            for &v in path {
                if v >= dag.n() || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
            if path.windows(2).any(|w| !dag.has_arc(w[0], w[1])) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn min_path_cover(dag: &NeighborhoodDag) -> PathCover {
    let n = dag.n();
    let matching = max_bipartite_matching(n, n, &dag.arcs());

    let mut next = vec![None; n];
    let mut has_pred = vec![false; n];
    for &(u, v) in matching.pairs() {
        next[u] = Some(v);
        has_pred[v] = true;
    }

    let paths = (0..n)
        .filter(|&v| !has_pred[v])
        .map(|start| {
            let mut path = vec![start];
            let mut cur = start;
            while let Some(v) = next[cur] {
                path.push(v);
                cur = v;
            }
            path
        })
        .collect();
    PathCover { paths }
}
