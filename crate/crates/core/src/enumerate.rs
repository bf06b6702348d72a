//! Exhaustive generation of non-isomorphic free trees.
//!
//! Rooted trees stream out as canonical level sequences (successor rule of
//! the classic constant-time rooted generator); a rooting passes the filter
//! exactly when its root is the canonical centroid of the underlying free
//! tree, so every free tree is emitted exactly once, in a deterministic
//! order.

use rand::Rng;

use crate::canon::rooted_code;
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest supported order for exhaustive enumeration.
pub const MAX_ENUMERATION_ORDER: usize = 20;

/// Known free-tree counts for orders 1..=14 (used by tests and docs).
pub const FREE_TREE_COUNTS: [usize; 14] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159];

/// Streaming generator of all unlabeled trees of a fixed order.
pub struct TreeStream {
    n: usize,
    levels: Option<Vec<usize>>,
}

/// All non-isomorphic free trees on `n` vertices, each exactly once.
pub fn free_trees(n: usize) -> Result<TreeStream> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange {
            n,
            min: 1,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(TreeStream {
        n,
        levels: Some((1..=n).collect()),
    })
}

impl TreeStream {
    /// The order of every emitted tree.
    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for TreeStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let levels = self.levels.as_ref()?;
            let candidate = decode_levels(levels);
            let keep = centroid_canonical(&candidate.0, candidate.1.n());
            let graph = candidate.1;
            self.advance();
            if keep {
                return Some(graph);
            }
        }
    }
}

impl TreeStream {
    /// Successor rule on canonical level sequences: find the last entry
    /// above 2, then repeat the block starting at its parent.
    fn advance(&mut self) {
        let Some(levels) = self.levels.as_mut() else {
            return;
        };
        let Some(p) = levels.iter().rposition(|&l| l > 2) else {
            self.levels = None;
            return;
        };
        let q = levels[..p]
            .iter()
            .rposition(|&l| l == levels[p] - 1)
            .expect("a parent level precedes every deeper level");
        for i in p..levels.len() {
            levels[i] = levels[i - (p - q)];
        }
    }
}

/// Builds the tree for a level sequence and returns its parent array.
fn decode_levels(levels: &[usize]) -> (Vec<usize>, Graph) {
    let n = levels.len();
    let mut parent = vec![usize::MAX; n];
    // parent of i = nearest j < i one level up
    let mut last_at_level = vec![usize::MAX; n + 2];
    last_at_level[1] = 0;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let l = levels[i];
        let p = last_at_level[l - 1];
        parent[i] = p;
        edges.push((p, i));
        last_at_level[l] = i;
    }
    (
        parent,
        Graph::from_edges(n, edges).expect("level sequence decodes to a tree"),
    )
}

/// True when vertex 0 (the root of the level sequence) is the canonical
/// centroid choice for the underlying free tree.
fn centroid_canonical(parent: &[usize], n: usize) -> bool {
    if n <= 2 {
        // The single tree of these orders appears exactly once.
        return true;
    }
    let mut size = vec![1usize; n];
    let mut heaviest_child = vec![0usize; n];
    for i in (1..n).rev() {
        let p = parent[i];
        size[p] += size[i];
        heaviest_child[p] = heaviest_child[p].max(size[i]);
    }
    for i in 1..n {
        heaviest_child[i] = heaviest_child[i].max(n - size[i]);
    }
    // heaviest_child[v] is now the largest component of tree - v.
    let best = *heaviest_child.iter().min().expect("n >= 1");
    if heaviest_child[0] != best {
        return false;
    }
    let mut centroids = (0..n).filter(|&v| heaviest_child[v] == best);
    let first = centroids.next().expect("a centroid exists");
    match centroids.next() {
        None => true,
        Some(other) => {
            debug_assert_eq!(first, 0, "root is a centroid by the check above");
            // Two centroids: emit only the rooting with the lexicographically
            // larger code (equal codes mean a symmetric tree, which this
            // rooting represents alone).
            let g = decode_levels_graph_for_codes(parent, n);
            rooted_code(&g, 0, usize::MAX) >= rooted_code(&g, other, usize::MAX)
        }
    }
}

fn decode_levels_graph_for_codes(parent: &[usize], n: usize) -> Graph {
    let edges = (1..n).map(|i| (parent[i], i));
    Graph::from_edges(n, edges).expect("parent array is a tree")
}

/// Predicates on trees for filtering enumeration output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreePredicate {
    /// Matching number at least p.
    NuAtLeast(usize),
    /// Matching number exactly p.
    NuEquals(usize),
    /// A perfect matching exists (even order, nu = n/2).
    PerfectMatching,
}

impl TreePredicate {
    pub fn matches(&self, tree: &Graph) -> bool {
        let nu = tree.edge_independence_number();
        match *self {
            TreePredicate::NuAtLeast(p) => nu >= p,
            TreePredicate::NuEquals(p) => nu == p,
            TreePredicate::PerfectMatching => tree.n().is_multiple_of(2) && nu == tree.n() / 2,
        }
    }
}

/// The subsequence of the stream satisfying the predicate.
pub fn filter_trees(stream: TreeStream, predicate: TreePredicate) -> impl Iterator<Item = Graph> {
    stream.filter(move |t| predicate.matches(t))
}

/// A uniformly random labeled tree on `n` vertices (random Pruefer
/// sequence), as a Graph.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1, "random_tree needs n >= 1");
    match n {
        1 => Graph::empty(1),
        2 => Graph::from_edges(2, [(0, 1)]).expect("edge valid"),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            crate::oracle::prufer_decode(n, &seq)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{canon::canonical_code, families};
    use std::collections::BTreeSet;

    #[test]
    fn counts_match_known_sequence_small() {
        for (i, &expected) in FREE_TREE_COUNTS.iter().take(10).enumerate() {
            let n = i + 1;
            assert_eq!(free_trees(n).unwrap().count(), expected, "order {n}");
        }
    }

    #[test]
    fn order_four_is_path_and_star() {
        let set: BTreeSet<_> = free_trees(4)
            .unwrap()
            .map(|t| canonical_code(&t).unwrap())
            .collect();
        let expected: BTreeSet<_> = [
            canonical_code(&families::path_graph(4)).unwrap(),
            canonical_code(&families::star_graph(4)).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn single_vertex_stream() {
        let trees: Vec<Graph> = free_trees(1).unwrap().collect();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].n(), 1);
    }

    #[test]
    fn all_emitted_are_distinct_trees() {
        for n in 2..=9 {
            let mut codes = BTreeSet::new();
            for t in free_trees(n).unwrap() {
                assert!(t.is_tree());
                assert_eq!(t.n(), n);
                assert!(
                    codes.insert(canonical_code(&t).unwrap()),
                    "duplicate at n={n}"
                );
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(free_trees(0).is_err());
        assert!(free_trees(MAX_ENUMERATION_ORDER + 1).is_err());
    }

    #[test]
    fn perfect_matching_filter_n6() {
        let trees: Vec<Graph> =
            filter_trees(free_trees(6).unwrap(), TreePredicate::PerfectMatching).collect();
        // Exactly the path and the (2,2,1)-spider.
        assert_eq!(trees.len(), 2);
        let codes: BTreeSet<_> = trees.iter().map(|t| canonical_code(t).unwrap()).collect();
        assert!(codes.contains(&canonical_code(&families::path_graph(6)).unwrap()));
        assert!(codes.contains(&canonical_code(&families::t_n_p(6, 3).unwrap()).unwrap()));
    }

    #[test]
    fn nu_filters() {
        let all: Vec<Graph> =
            filter_trees(free_trees(5).unwrap(), TreePredicate::NuAtLeast(1)).collect();
        assert_eq!(all.len(), 3);
        let stars: Vec<Graph> =
            filter_trees(free_trees(6).unwrap(), TreePredicate::NuEquals(1)).collect();
        assert_eq!(stars.len(), 1);
        assert_eq!(
            canonical_code(&stars[0]).unwrap(),
            canonical_code(&families::star_graph(6)).unwrap()
        );
    }

    #[test]
    fn nested_populations() {
        for n in 4..=10 {
            let mut previous = usize::MAX;
            for p in 1..=n / 2 {
                let count =
                    filter_trees(free_trees(n).unwrap(), TreePredicate::NuAtLeast(p)).count();
                assert!(count <= previous, "population must shrink with p");
                previous = count;
            }
        }
    }

    #[test]
    fn random_trees_are_trees() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 1..=16 {
            for _ in 0..10 {
                assert!(random_tree(n, &mut rng).is_tree());
            }
        }
    }
}
