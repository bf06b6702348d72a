//! Undirected simple graphs on dense vertex labels `0..n`.
//!
//! The one carrier type for everything in the crate. Values are immutable
//! after construction; all operations return fresh graphs.

use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result};

/// An undirected simple graph with vertices labeled `0..n`.
///
/// Invariants: no self-loops, no duplicate edges, every endpoint in range.
/// Edges are stored sorted with `u < v` per pair, so equal labeled graphs
/// compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, deduplicating repeated pairs.
    ///
    /// Rejects self-loops and out-of-range endpoints, naming the offending
    /// pair.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { u, v, n });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_edges(n, edges).expect("complete graph edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list with `u < v` in every pair.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        // Neighbor lists are sorted: they are filled from the sorted edge list.
        self.adj[u].binary_search(&v).is_ok()
    }

    /// The complement within `K_n`: edges are exactly the non-edges of self.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.n * (self.n - 1) / 2 - self.edges.len());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, edges).expect("complement edges are valid")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// A tree: connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// A forest: acyclic, i.e. every component is a tree.
    pub fn is_forest(&self) -> bool {
        let comps = self.connected_components();
        self.edges.len() + comps.len() == self.n
    }

    /// Number of degree-one vertices.
    pub fn pendant_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// The subgraph induced by `verts`, relabeled to `0..verts.len()` in the
    /// order given.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges = self.edges.iter().filter_map(|&(u, v)| {
            let (iu, iv) = (index[u], index[v]);
            (iu != usize::MAX && iv != usize::MAX).then_some((iu, iv))
        });
        Graph::from_edges(verts.len(), edges.collect::<Vec<_>>()).expect("induced edges valid")
    }

    /// The graph with `verts` removed (remaining vertices relabeled densely,
    /// preserving order).
    pub fn without_vertices(&self, verts: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|v| !verts.contains(v)).collect();
        self.induced(&keep)
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(self.n + other.n, edges.collect::<Vec<_>>()).expect("union edges valid")
    }

    /// Size of a maximum matching, `nu(G)`.
    ///
    /// Forests use leaf-matching pruning (linear time, exact on forests).
    /// Other graphs fall back to exhaustive search and are intended for
    /// oracle-scale orders only.
    pub fn edge_independence_number(&self) -> usize {
        if self.is_forest() {
            self.forest_matching_number()
        } else {
            crate::oracle::maximum_matching_brute(self)
        }
    }

    /// Leaf pruning: repeatedly match a leaf to its neighbor and delete both.
    fn forest_matching_number(&self) -> usize {
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.n];
        let mut leaves: VecDeque<usize> = (0..self.n).filter(|&v| degree[v] == 1).collect();
        let mut matched = 0;
        while let Some(leaf) = leaves.pop_front() {
            if !alive[leaf] || degree[leaf] == 0 {
                continue;
            }
            let partner = self.adj[leaf]
                .iter()
                .copied()
                .find(|&u| alive[u])
                .expect("leaf with degree 1 has a live neighbor");
            matched += 1;
            alive[leaf] = false;
            alive[partner] = false;
            for &w in &self.adj[partner] {
                if alive[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        leaves.push_back(w);
                    }
                }
            }
            degree[leaf] = 0;
            degree[partner] = 0;
        }
        matched
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn from_edges_builds_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree(0), 1);
        assert_eq!(g.degree(1), 2);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, []).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_tree());
    }

    #[test]
    fn duplicate_edges_dedup() {
        let g = Graph::from_edges(4, [(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        let g2 = Graph::from_edges(4, [(1, 0), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::EdgeOutOfRange { u: 0, v: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop { v: 1 })
        );
    }

    #[test]
    fn complement_of_p4_is_p4_shaped() {
        let p4 = families::path_graph(4);
        let c = p4.complement();
        assert_eq!(c.edges(), &[(0, 2), (0, 3), (1, 3)]);
        assert_eq!(c.complement(), p4);
    }

    #[test]
    fn complement_of_star_is_clique_plus_isolated() {
        let star = families::star_graph(4); // K_{1,3}, hub 0
        let c = star.complement();
        assert_eq!(c.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(c.degree(0), 0);
    }

    #[test]
    fn complement_of_k1() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.complement(), k1);
    }

    #[test]
    fn tree_predicates() {
        assert!(families::path_graph(5).is_tree());
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_tree());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_tree());
        assert!(two_k2.is_forest());
    }

    #[test]
    fn matching_number_examples() {
        assert_eq!(families::path_graph(6).edge_independence_number(), 3);
        assert_eq!(families::star_graph(6).edge_independence_number(), 1);
        let t = families::t_n_p(10, 3).unwrap();
        assert_eq!(t.edge_independence_number(), 3);
        assert_eq!(
            t.edge_independence_number(),
            crate::oracle::maximum_matching_brute(&t)
        );
    }

    #[test]
    fn pendant_counts() {
        assert_eq!(families::path_graph(5).pendant_count(), 2);
        assert_eq!(families::star_graph(8).pendant_count(), 7);
        assert_eq!(families::t_n_p(9, 3).unwrap().pendant_count(), 6);
    }

    #[test]
    fn matching_number_on_cycle_uses_brute_force() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.edge_independence_number(), 2);
    }
}
