//! Canonical codes for unlabeled trees.
//!
//! Center-rooted AHU codes: two trees get equal codes exactly when they are
//! isomorphic. Codes are printable ASCII (a center-count marker followed by
//! balanced parentheses), so they embed directly in reports.

use std::fmt;

use crate::graph::Graph;
use crate::{Error, Result};

/// Canonical identifier of an unlabeled tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCode(Vec<u8>);

impl TreeCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("tree codes are ASCII")
    }
}

impl fmt::Display for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for TreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TreeCode({})", self.as_str())
    }
}

/// Canonical code of a tree: AHU code rooted at the center (one center), or
/// the sorted pair of half codes (two centers). Relabeling-invariant.
pub fn canonical_code(g: &Graph) -> Result<TreeCode> {
    if !g.is_tree() {
        return Err(Error::NotATree {
            context: "canonical_code",
        });
    }
    let centers = tree_centers(g);
    let code = match centers[..] {
        [c] => {
            let mut out = vec![b'1'];
            out.extend(rooted_code(g, c, usize::MAX));
            out
        }
        [c1, c2] => {
            let a = rooted_code(g, c1, c2);
            let b = rooted_code(g, c2, c1);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut out = vec![b'2'];
            out.extend(lo);
            out.extend(hi);
            out
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    Ok(TreeCode(code))
}

/// The 1 or 2 middle vertices of the tree (ends of all longest paths peeled
/// away simultaneously).
pub fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in g.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut centers: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    centers.sort_unstable();
    centers
}

/// AHU code of the subtree rooted at `root`, not descending into `blocked`
/// (pass `usize::MAX` to code the whole tree).
pub(crate) fn rooted_code(g: &Graph, root: usize, blocked: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = g
        .neighbors(root)
        .iter()
        .filter(|&&c| c != blocked)
        .map(|&c| rooted_code(g, c, root))
        .collect();
    children.sort();
    let mut out = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{families, oracle};

    #[test]
    fn relabeling_invariance() {
        let a = families::path_graph(4);
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a).unwrap(), canonical_code(&b).unwrap());
    }

    #[test]
    fn distinguishes_path_from_star() {
        let p = canonical_code(&families::path_graph(4)).unwrap();
        let s = canonical_code(&families::star_graph(4)).unwrap();
        assert_ne!(p, s);
    }

    #[test]
    fn rejects_non_trees() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(canonical_code(&c4).is_err());
    }

    #[test]
    fn three_trees_on_five_vertices() {
        let mut codes: Vec<TreeCode> = oracle::labeled_trees(5)
            .iter()
            .map(|t| canonical_code(t).unwrap())
            .collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 3);
    }

    #[test]
    fn different_orders_never_collide() {
        // P_4 (bicentral) and P_5 (central) wrap to different markers.
        let p4 = canonical_code(&families::path_graph(4)).unwrap();
        let p5 = canonical_code(&families::path_graph(5)).unwrap();
        assert_ne!(p4, p5);
    }

    #[test]
    fn agrees_with_brute_force_isomorphism() {
        // All pairs among labeled trees on 6 vertices, sampled sparsely.
        let trees = oracle::labeled_trees(6);
        for (i, a) in trees.iter().enumerate().step_by(97) {
            for (j, b) in trees.iter().enumerate().step_by(101) {
                let same_code = canonical_code(a).unwrap() == canonical_code(b).unwrap();
                assert_eq!(
                    same_code,
                    oracle::are_isomorphic(a, b),
                    "codes disagree with brute force at pair ({i},{j})"
                );
            }
        }
    }

    #[test]
    fn centers_of_paths() {
        assert_eq!(tree_centers(&families::path_graph(5)), vec![2]);
        assert_eq!(tree_centers(&families::path_graph(6)), vec![2, 3]);
        assert_eq!(tree_centers(&families::path_graph(1)), vec![0]);
        assert_eq!(tree_centers(&families::path_graph(2)), vec![0, 1]);
    }
}
