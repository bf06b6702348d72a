//! Brute-force reference implementations.
//!
//! Everything here is exponential and exists to cross-check the fast paths
//! at small orders. None of it is called from production code paths except
//! `maximum_matching_brute`, which backs `edge_independence_number` on
//! non-forest inputs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::Graph;
use crate::matchpoly::MatchingVector;

/// Matching counts by direct enumeration of all matchings (backtracking over
/// the edge list). Visits every matching exactly once, so the cost is the
/// Hosoya index times the edge count.
pub fn matching_counts_enumeration(g: &Graph) -> MatchingVector {
    let mut counts = vec![BigUint::zero(); g.n() / 2 + 1];
    counts[0] = BigUint::one();
    let edges = g.edges();
    let mut used = vec![false; g.n()];
    fn rec(
        edges: &[(usize, usize)],
        start: usize,
        used: &mut [bool],
        k: usize,
        counts: &mut [BigUint],
    ) {
        for i in start..edges.len() {
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            counts[k + 1] += BigUint::one();
            used[u] = true;
            used[v] = true;
            rec(edges, i + 1, used, k + 1, counts);
            used[u] = false;
            used[v] = false;
        }
    }
    rec(edges, 0, &mut used, 0, &mut counts);
    MatchingVector::new(g.n(), counts).expect("enumerated counts are well-formed")
}

/// Maximum matching size by branch and bound over the edge list.
pub fn maximum_matching_brute(g: &Graph) -> usize {
    fn rec(edges: &[(usize, usize)], used: &mut [bool], k: usize, best: &mut usize) {
        *best = (*best).max(k);
        for i in 0..edges.len() {
            let (u, v) = edges[i];
            if used[u] || used[v] {
                continue;
            }
            used[u] = true;
            used[v] = true;
            rec(&edges[i + 1..], used, k + 1, best);
            used[u] = false;
            used[v] = false;
        }
    }
    let mut best = 0;
    let mut used = vec![false; g.n()];
    rec(g.edges(), &mut used, 0, &mut best);
    best
}

/// Isomorphism by exhaustive permutation search. Usable up to n ~ 8.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.n();
    let mut degrees_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut degrees_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    degrees_a.sort_unstable();
    degrees_b.sort_unstable();
    if degrees_a != degrees_b {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(a, b, &mut perm, 0)
}

fn permute_check(a: &Graph, b: &Graph, perm: &mut Vec<usize>, at: usize) -> bool {
    let n = a.n();
    if at == n {
        return a.edges().iter().all(|&(u, v)| b.has_edge(perm[u], perm[v]));
    }
    for i in at..n {
        perm.swap(at, i);
        // Prune on degree and on edges among already-placed vertices.
        if a.degree(at) == b.degree(perm[at]) {
            let consistent = (0..at).all(|w| a.has_edge(w, at) == b.has_edge(perm[w], perm[at]));
            if consistent && permute_check(a, b, perm, at + 1) {
                perm.swap(at, i);
                return true;
            }
        }
        perm.swap(at, i);
    }
    false
}

/// Every labeled tree on `n` vertices, decoded from all Pruefer sequences.
/// There are n^(n-2) of them; keep n small.
pub fn labeled_trees(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "labeled_trees needs n >= 1");
    if n == 1 {
        return vec![Graph::empty(1)];
    }
    if n == 2 {
        return vec![Graph::from_edges(2, [(0, 1)]).unwrap()];
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        out.push(prufer_decode(n, &seq));
        // Odometer increment over base-n digits.
        let mut i = 0;
        loop {
            if i == seq.len() {
                return out;
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Decodes a Pruefer sequence into the labeled tree it encodes.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().expect("two vertices remain");
    let Reverse(b) = leaves.pop().expect("two vertices remain");
    edges.push((a, b));
    Graph::from_edges(n, edges).expect("Pruefer decode yields a valid tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn enumeration_on_small_graphs() {
        let k4 = Graph::complete(4);
        let v = matching_counts_enumeration(&k4);
        assert_eq!(u64::try_from(&v.get(1)).unwrap(), 6);
        assert_eq!(u64::try_from(&v.get(2)).unwrap(), 3);
    }

    #[test]
    fn brute_matching_sizes() {
        assert_eq!(maximum_matching_brute(&families::path_graph(7)), 3);
        assert_eq!(maximum_matching_brute(&families::star_graph(5)), 1);
    }

    #[test]
    fn isomorphism_on_paths_and_stars() {
        let a = families::path_graph(4);
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap(); // relabeled path
        assert!(are_isomorphic(&a, &b));
        assert!(!are_isomorphic(&a, &families::star_graph(4)));
    }

    #[test]
    fn prufer_covers_all_labeled_trees() {
        let trees = labeled_trees(4);
        assert_eq!(trees.len(), 16); // 4^2
        for t in &trees {
            assert!(t.is_tree());
        }
        assert_eq!(labeled_trees(5).len(), 125);
    }

    #[test]
    fn prufer_decode_all_leaf_orders() {
        // A sequence forcing re-use of freshly freed small labels.
        let g = prufer_decode(6, &[0, 0, 0, 0]);
        assert!(g.is_tree());
        assert_eq!(g.degree(0), 5);
        let g = prufer_decode(6, &[5, 4, 3, 2]);
        assert!(g.is_tree());
    }
}
