//! The neighborhood-inclusion DAG of a graph.
//!
//! There is an arc `x -> y` whenever `N[x] ⊆ N[y]`; vertices with identical
//! closed neighborhoods are oriented from the smaller label to the larger one.
//! Inclusion is a preorder and the label tie-break turns it into a strict
//! partial order, so the resulting digraph is acyclic and transitive.

use std::fmt::Write;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodDag {
    succ: Vec<VertexSet>,
    level: Vec<usize>,
}

impl NeighborhoodDag {
    pub fn build(g: &Graph) -> Self {
        let n = g.n();
        let succ: Vec<VertexSet> = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| y != x && includes(g, x, y))
                    .collect()
            })
            .collect();

        // |N[x]| is non-decreasing along arcs and labels break ties, so this
        // sort is a topological order.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (g.closed(v).len(), v));
        let mut level = vec![1; n];
        for &x in &order {
            for y in &succ[x] {
                level[y] = level[y].max(level[x] + 1);
            }
        }
        NeighborhoodDag { succ, level }
    }

    pub fn n(&self) -> usize {
        self.succ.len()
    }

    pub fn successors(&self, v: usize) -> &VertexSet {
        &self.succ[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.succ[u].contains(v)
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.succ[u].iter().map(move |v| (u, v)))
            .collect()
    }

    /// Longest-path depth from a source; sources sit on level 1.
    pub fn level(&self, v: usize) -> usize {
        self.level[v]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }

    /// Graphviz digraph with one node per vertex annotated by its level.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in 0..self.n() {
            let _ = writeln!(out, "    {v} [label=\"{v}\", level={}];", self.level[v]);
        }
        for (u, v) in self.arcs() {
            let _ = writeln!(out, "    {u} -> {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Whether the arc `x -> y` belongs in the DAG.
fn includes(g: &Graph, x: usize, y: usize) -> bool {
    let (nx, ny) = (g.closed(x), g.closed(y));
    nx.is_proper_subset(ny) || (nx == ny && x < y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// Inclusion table computed pair by pair on plain vectors.
    fn brute_arcs(g: &Graph) -> Vec<(usize, usize)> {
        let nb = |v: usize| {
            let mut s: Vec<usize> = (0..g.n()).filter(|&u| u == v || g.has_edge(u, v)).collect();
            s.sort();
            s
        };
        let mut arcs = vec![];
        for x in 0..g.n() {
            for y in 0..g.n() {
                if x == y {
                    continue;
                }
                let (a, b) = (nb(x), nb(y));
                let sub = a.iter().all(|v| b.contains(v));
                if sub && (a != b || x < y) {
                    arcs.push((x, y));
                }
            }
        }
        arcs
    }

    #[test]
    fn p4_dag() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let d = NeighborhoodDag::build(&g);
        assert_eq!(d.arcs(), brute_arcs(&g));
        assert_eq!(d.arcs(), vec![(0, 1), (3, 2)]);
        assert_eq!(d.levels(), &[1, 2, 2, 1]);
    }

    #[test]
    fn k4_dag_breaks_ties_by_label() {
        let g = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let d = NeighborhoodDag::build(&g);
        let mut expected = vec![];
        for i in 0..4 {
            for j in i + 1..4 {
                expected.push((i, j));
            }
        }
        assert_eq!(d.arcs(), expected);
        assert_eq!(d.levels(), &[1, 2, 3, 4]);
    }

    #[test]
    fn c4_dag_is_edgeless() {
        let g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let d = NeighborhoodDag::build(&g);
        assert_eq!(brute_arcs(&g), vec![]);
        assert!(d.arcs().is_empty());
        assert_eq!(d.levels(), &[1, 1, 1, 1]);
    }

    #[test]
    fn dot_output() {
        let d = NeighborhoodDag::build(&Graph::empty(0));
        assert_eq!(d.to_dot(), "digraph {\n}\n");

        let d = NeighborhoodDag::build(&Graph::empty(1));
        assert_eq!(d.to_dot(), "digraph {\n    0 [label=\"0\", level=1];\n}\n");

        let d = NeighborhoodDag::build(&graph(4, &[(0, 1), (1, 2), (2, 3)]));
        let dot = d.to_dot();
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.contains("    0 -> 1;\n"));
        assert!(dot.contains("    3 -> 2;\n"));
        assert_eq!(dot.matches("label=").count(), 4);
    }
}
