//! Constructors for the named tree families.
//!
//! Labeling is fixed (hub at vertex 0, branches appended in increasing
//! labels) so outputs are byte-for-byte reproducible in graph6.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::{Error, Result};

/// The named families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    /// The path `P_n`.
    #[serde(rename = "path")]
    Path,
    /// The star `K_{1,n-1}`.
    #[serde(rename = "star")]
    Star,
    /// Three branches of 1, 1 and n-3 vertices at a common hub; the
    /// second-largest tree in the complement order.
    #[serde(rename = "t_n_2")]
    Tn2,
    /// Branches of 1, 2 and n-4 vertices at a common hub; the second-largest
    /// complement among perfect-matching trees.
    #[serde(rename = "t_n_2_1")]
    Tn21,
    /// Star on n-p+1 vertices with a pendant edge attached to p-1 of its
    /// leaves; matching number exactly p.
    #[serde(rename = "t_n_p")]
    TnP,
}

impl Family {
    pub fn cli_name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Tn2 => "t_n_2",
            Family::Tn21 => "t_n_2_1",
            Family::TnP => "t_n_p",
        }
    }
}

/// A fully parameterized family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    /// Only used by `TnP`.
    pub p: Option<usize>,
}

/// Builds the requested family member, rejecting out-of-range parameters
/// with the violated bound named.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    let n = spec.n;
    match spec.family {
        Family::Path => {
            require(n >= 1, "path", "n >= 1", n)?;
            Ok(path_graph(n))
        }
        Family::Star => {
            require(n >= 1, "star", "n >= 1", n)?;
            Ok(star_graph(n))
        }
        Family::Tn2 => t_n_2(n),
        Family::Tn21 => t_n_2_1(n),
        Family::TnP => {
            let p = spec.p.ok_or(Error::FamilyParameter {
                family: "t_n_p",
                reason: "parameter p is required".into(),
            })?;
            t_n_p(n, p)
        }
    }
}

fn require(ok: bool, family: &'static str, bound: &str, n: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::FamilyParameter {
            family,
            reason: format!("requires {bound} (got n = {n})"),
        })
    }
}

/// `P_n`: vertices 0..n in a line.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges valid")
}

/// `K_{1,n-1}`: hub 0 joined to everything else.
pub fn star_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("star edges valid")
}

/// A spider: one hub (vertex 0) with a path of `len` vertices per entry of
/// `legs`, labeled in order.
pub(crate) fn spider(legs: &[usize]) -> Graph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges).expect("spider edges valid")
}

/// Branches of 1, 1 and n-3 vertices at the hub. Collapses to the star at
/// n = 4 (a degenerate member; sweeps flag that regime).
pub fn t_n_2(n: usize) -> Result<Graph> {
    require(n >= 4, "t_n_2", "n >= 4", n)?;
    Ok(spider(&[1, 1, n - 3]))
}

/// Branches of 1, 2 and n-4 vertices at the hub.
pub fn t_n_2_1(n: usize) -> Result<Graph> {
    require(n >= 6, "t_n_2_1", "n >= 6", n)?;
    Ok(spider(&[1, 2, n - 4]))
}

/// Star on `n - p + 1` vertices (hub 0) with a pendant edge attached to
/// `p - 1` of its leaves. `p = 1` is the plain star.
///
/// Labeling: bare leaves first (1..=n-2p+1), then each lengthened branch as
/// a consecutive pair.
pub fn t_n_p(n: usize, p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(Error::FamilyParameter {
            family: "t_n_p",
            reason: format!("requires p >= 1 (got p = {p})"),
        });
    }
    if 2 * p > n {
        return Err(Error::FamilyParameter {
            family: "t_n_p",
            reason: format!("requires p <= floor(n/2) (got n = {n}, p = {p})"),
        });
    }
    let bare = n - 2 * p + 1;
    let mut edges: Vec<(usize, usize)> = (1..=bare).map(|v| (0, v)).collect();
    let mut next = bare + 1;
    for _ in 0..p - 1 {
        edges.push((0, next));
        edges.push((next, next + 1));
        next += 2;
    }
    Ok(Graph::from_edges(n, edges).expect("t_n_p edges valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{canonical_code, oracle};

    #[test]
    fn path_degrees() {
        let p5 = path_graph(5);
        let mut degrees: Vec<usize> = (0..5).map(|v| p5.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [1, 1, 2, 2, 2]);
    }

    #[test]
    fn t_7_3_shape() {
        let t = t_n_p(7, 3).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.edge_independence_number(), 3);
        assert_eq!(t.pendant_count(), 4);
        assert_eq!(oracle::maximum_matching_brute(&t), 3);
    }

    #[test]
    fn t1_6_2_shape() {
        let t = t_n_2_1(6).unwrap();
        let mut degrees: Vec<usize> = (0..6).map(|v| t.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, [1, 1, 1, 2, 2, 3]);
        assert_eq!(t.edge_independence_number(), 3);
    }

    #[test]
    fn degenerate_members() {
        assert_eq!(
            canonical_code(&t_n_p(5, 1).unwrap()).unwrap(),
            canonical_code(&star_graph(5)).unwrap()
        );
        assert_eq!(
            canonical_code(&t_n_2(4).unwrap()).unwrap(),
            canonical_code(&star_graph(4)).unwrap()
        );
        // At n = 6 the perfect-matching family coincides with the 1-2-branch tree.
        assert_eq!(
            canonical_code(&t_n_p(6, 3).unwrap()).unwrap(),
            canonical_code(&t_n_2_1(6).unwrap()).unwrap()
        );
    }

    #[test]
    fn family_invariants() {
        assert_eq!(t_n_p(2, 1).unwrap().edge_independence_number(), 1);
        for n in 3..=20 {
            for p in 1..=n / 2 {
                let t = t_n_p(n, p).unwrap();
                assert!(t.is_tree());
                assert_eq!(t.edge_independence_number(), p, "nu(T_{n}^{p})");
                let expected_pendants = if p == 1 { n - 1 } else { n - p };
                assert_eq!(t.pendant_count(), expected_pendants);
            }
        }
        for n in 5..=16 {
            assert_eq!(t_n_2(n).unwrap().pendant_count(), 3);
        }
        for n in 6..=16 {
            assert_eq!(t_n_2_1(n).unwrap().pendant_count(), 3);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(t_n_p(10, 7).is_err());
        assert!(t_n_p(10, 0).is_err());
        assert!(t_n_2(3).is_err());
        assert!(t_n_2_1(5).is_err());
        assert!(build_family(&FamilySpec {
            family: Family::TnP,
            n: 9,
            p: None
        })
        .is_err());
    }

    #[test]
    fn reproducible_labeling() {
        let a = crate::codec::to_graph6(&t_n_p(9, 3).unwrap()).unwrap();
        let b = crate::codec::to_graph6(&t_n_p(9, 3).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
