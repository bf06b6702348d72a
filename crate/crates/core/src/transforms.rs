//! Six matching-count-monotone tree transformations with executable
//! dominance checks and exact difference identities.
//!
//! Each transformation is explicit graph surgery on labeled vertices, not
//! pattern matching over arbitrary trees. The exact identity relating the
//! complement matching vectors of the input and output trees pins each
//! construction and is checked coefficient by coefficient in integer
//! arithmetic. The first three enlarge the complement in the quasi-order,
//! the last three shrink it.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::canon::canonical_code;
use crate::codec;
use crate::complement::lovasz_transform;
use crate::energy::{quasi_compare, QuasiOrderResult};
use crate::families::{path_graph, spider};
use crate::graph::Graph;
use crate::matchpoly::{disjoint_union_counts, matching_counts, MatchingVector};
use crate::{Error, Result};

/// The transformation kinds, numbered as in the source material.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TransformKind {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

impl TransformKind {
    pub const ALL: [TransformKind; 6] = [
        TransformKind::F1,
        TransformKind::F2,
        TransformKind::F3,
        TransformKind::F4,
        TransformKind::F5,
        TransformKind::F6,
    ];

    /// Whether the theorem predicts the *after* complement above the
    /// *before* complement (true for F1-F3) or below (F4-F6).
    pub fn complement_increases(&self) -> bool {
        matches!(
            self,
            TransformKind::F1 | TransformKind::F2 | TransformKind::F3
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            TransformKind::F1 => "f1",
            TransformKind::F2 => "f2",
            TransformKind::F3 => "f3",
            TransformKind::F4 => "f4",
            TransformKind::F5 => "f5",
            TransformKind::F6 => "f6",
        }
    }
}

/// A fully parameterized transformation instance.
///
/// - `F1`: two pendant paths of `m` and `n` vertices hang by an edge from
///   the marked vertex `u` of the base tree; afterwards one merged pendant
///   path of `m + n` vertices hangs there.
/// - `F2`: the three-branch spider with branch sizes `(m, n, s)`,
///   `s >= m >= 2`, `n >= 1`, becomes the spider `(1, n, m+s-1)`.
/// - `F3`: the spider `(m, n, 1)` with `m >= n >= 2` becomes
///   `(m+1, n-1, 1)` (the single pendant vertex slides one step).
/// - `F4`: two trees joined by the edge `u v` become the trees glued at
///   `u = v` with a new pendant vertex attached to the glue point.
/// - `F5`: a star hub with `r >= 2` leaves hanging by an edge from `u`
///   becomes `r - 1` leaves plus one pendant 2-path directly at `u`.
/// - `F6`: an intermediate vertex at `u` carrying `s` leaves and `t`
///   pendant 2-paths becomes `s - 1` leaves and `t + 1` 2-paths directly
///   at `u`.
///
/// `F5`/`F6` additionally require the constructed input tree to have
/// exactly `n - nu` pendant vertices.
#[derive(Clone, Debug, PartialEq)]
pub enum TransformSpec {
    F1 {
        base: Graph,
        u: usize,
        m: usize,
        n: usize,
    },
    F2 {
        m: usize,
        n: usize,
        s: usize,
    },
    F3 {
        m: usize,
        n: usize,
    },
    F4 {
        left: Graph,
        u: usize,
        right: Graph,
        v: usize,
    },
    F5 {
        base: Graph,
        u: usize,
        r: usize,
    },
    F6 {
        base: Graph,
        u: usize,
        s: usize,
        t: usize,
    },
}

impl TransformSpec {
    pub fn kind(&self) -> TransformKind {
        match self {
            TransformSpec::F1 { .. } => TransformKind::F1,
            TransformSpec::F2 { .. } => TransformKind::F2,
            TransformSpec::F3 { .. } => TransformKind::F3,
            TransformSpec::F4 { .. } => TransformKind::F4,
            TransformSpec::F5 { .. } => TransformKind::F5,
            TransformSpec::F6 { .. } => TransformKind::F6,
        }
    }
}

/// Wire form: graphs as graph6 strings, tagged by kind.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum WireSpec {
    F1 {
        base: String,
        u: usize,
        m: usize,
        n: usize,
    },
    F2 {
        m: usize,
        n: usize,
        s: usize,
    },
    F3 {
        m: usize,
        n: usize,
    },
    F4 {
        left: String,
        u: usize,
        right: String,
        v: usize,
    },
    F5 {
        base: String,
        u: usize,
        r: usize,
    },
    F6 {
        base: String,
        u: usize,
        s: usize,
        t: usize,
    },
}

impl Serialize for TransformSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let g6 = |g: &Graph| codec::to_graph6(g).map_err(serde::ser::Error::custom);
        let wire = match self {
            TransformSpec::F1 { base, u, m, n } => WireSpec::F1 {
                base: g6(base)?,
                u: *u,
                m: *m,
                n: *n,
            },
            TransformSpec::F2 { m, n, s } => WireSpec::F2 {
                m: *m,
                n: *n,
                s: *s,
            },
            TransformSpec::F3 { m, n } => WireSpec::F3 { m: *m, n: *n },
            TransformSpec::F4 { left, u, right, v } => WireSpec::F4 {
                left: g6(left)?,
                u: *u,
                right: g6(right)?,
                v: *v,
            },
            TransformSpec::F5 { base, u, r } => WireSpec::F5 {
                base: g6(base)?,
                u: *u,
                r: *r,
            },
            TransformSpec::F6 { base, u, s, t } => WireSpec::F6 {
                base: g6(base)?,
                u: *u,
                s: *s,
                t: *t,
            },
        };
        wire.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for TransformSpec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = WireSpec::deserialize(de)?;
        let g6 = |s: &str| codec::from_graph6(s).map_err(D::Error::custom);
        Ok(match wire {
            WireSpec::F1 { base, u, m, n } => TransformSpec::F1 {
                base: g6(&base)?,
                u,
                m,
                n,
            },
            WireSpec::F2 { m, n, s } => TransformSpec::F2 { m, n, s },
            WireSpec::F3 { m, n } => TransformSpec::F3 { m, n },
            WireSpec::F4 { left, u, right, v } => TransformSpec::F4 {
                left: g6(&left)?,
                u,
                right: g6(&right)?,
                v,
            },
            WireSpec::F5 { base, u, r } => TransformSpec::F5 {
                base: g6(&base)?,
                u,
                r,
            },
            WireSpec::F6 { base, u, s, t } => TransformSpec::F6 {
                base: g6(&base)?,
                u,
                s,
                t,
            },
        })
    }
}

/// Input and output of one transformation application.
#[derive(Clone, Debug)]
pub struct TransformResult {
    pub spec: TransformSpec,
    pub before: Graph,
    pub after: Graph,
}

/// Applies the transformation, validating every parameter bound and (for
/// F5/F6) the pendant-structure precondition. The output pair always
/// consists of two trees on the same vertex count.
pub fn apply_transform(spec: &TransformSpec) -> Result<TransformResult> {
    let (before, after) = match spec {
        TransformSpec::F1 { base, u, m, n } => build_f1(base, *u, *m, *n)?,
        TransformSpec::F2 { m, n, s } => build_f2(*m, *n, *s)?,
        TransformSpec::F3 { m, n } => build_f3(*m, *n)?,
        TransformSpec::F4 { left, u, right, v } => build_f4(left, *u, right, *v)?,
        TransformSpec::F5 { base, u, r } => build_f5(base, *u, *r)?,
        TransformSpec::F6 { base, u, s, t } => build_f6(base, *u, *s, *t)?,
    };
    assert!(
        before.is_tree() && after.is_tree(),
        "surgery must yield trees"
    );
    assert_eq!(before.n(), after.n(), "surgery must preserve the order");
    if matches!(spec, TransformSpec::F5 { .. } | TransformSpec::F6 { .. }) {
        // These preserve the matching number and the pendant count.
        assert_eq!(
            before.edge_independence_number(),
            after.edge_independence_number()
        );
        assert_eq!(before.pendant_count(), after.pendant_count());
    }
    Ok(TransformResult {
        spec: spec.clone(),
        before,
        after,
    })
}

fn check_base(base: &Graph, u: usize, min_order: usize, what: &str) -> Result<()> {
    if !base.is_tree() {
        return Err(Error::TransformParameter(format!(
            "{what} base graph must be a tree"
        )));
    }
    if base.n() < min_order {
        return Err(Error::TransformParameter(format!(
            "{what} base tree needs at least {min_order} vertices (got {})",
            base.n()
        )));
    }
    if u >= base.n() {
        return Err(Error::TransformParameter(format!(
            "{what} marked vertex {u} out of range 0..{}",
            base.n()
        )));
    }
    Ok(())
}

/// Appends a pendant path of `len` vertices hanging from `from`, labeling
/// the new vertices `next..next+len`.
fn attach_path(edges: &mut Vec<(usize, usize)>, from: usize, next: usize, len: usize) -> usize {
    let mut prev = from;
    for i in 0..len {
        edges.push((prev, next + i));
        prev = next + i;
    }
    next + len
}

fn build_f1(base: &Graph, u: usize, m: usize, n: usize) -> Result<(Graph, Graph)> {
    check_base(base, u, 2, "f1")?;
    if m < 1 || n < 1 {
        return Err(Error::TransformParameter(format!(
            "f1 requires m >= 1 and n >= 1 (got m = {m}, n = {n})"
        )));
    }
    let k = base.n();
    let total = k + m + n;
    let mut before_edges = base.edges().to_vec();
    let next = attach_path(&mut before_edges, u, k, m);
    attach_path(&mut before_edges, u, next, n);
    let mut after_edges = base.edges().to_vec();
    attach_path(&mut after_edges, u, k, m + n);
    Ok((
        Graph::from_edges(total, before_edges)?,
        Graph::from_edges(total, after_edges)?,
    ))
}

fn build_f2(m: usize, n: usize, s: usize) -> Result<(Graph, Graph)> {
    if !(s >= m && m >= 2 && n >= 1) {
        return Err(Error::TransformParameter(format!(
            "f2 requires s >= m >= 2 and n >= 1 (got m = {m}, n = {n}, s = {s})"
        )));
    }
    Ok((spider(&[m, n, s]), spider(&[1, n, m + s - 1])))
}

fn build_f3(m: usize, n: usize) -> Result<(Graph, Graph)> {
    if !(m >= n && n >= 2) {
        return Err(Error::TransformParameter(format!(
            "f3 requires m >= n >= 2 (got m = {m}, n = {n})"
        )));
    }
    Ok((spider(&[m, n, 1]), spider(&[m + 1, n - 1, 1])))
}

fn build_f4(left: &Graph, u: usize, right: &Graph, v: usize) -> Result<(Graph, Graph)> {
    check_base(left, u, 2, "f4 (left)")?;
    check_base(right, v, 2, "f4 (right)")?;
    let m = left.n();
    let n = right.n();
    // Before: the two trees joined by the edge u-v.
    let mut before_edges = left.edges().to_vec();
    before_edges.extend(right.edges().iter().map(|&(a, b)| (a + m, b + m)));
    before_edges.push((u, m + v));
    // After: glue v onto u, relabel the rest of the right tree densely,
    // and attach the new pendant vertex last.
    let relabel = |x: usize| {
        if x == v {
            u
        } else {
            m + x - usize::from(x > v)
        }
    };
    let mut after_edges = left.edges().to_vec();
    after_edges.extend(right.edges().iter().map(|&(a, b)| (relabel(a), relabel(b))));
    after_edges.push((u, m + n - 1));
    Ok((
        Graph::from_edges(m + n, before_edges)?,
        Graph::from_edges(m + n, after_edges)?,
    ))
}

/// Checks the F5/F6 structural precondition on the constructed input tree:
/// exactly `n - nu` pendant vertices. With that, every internal vertex has
/// a pendant neighbor, in particular the attachment vertex.
fn check_pendant_structure(tree: &Graph, what: &str) -> Result<usize> {
    let nu = tree.edge_independence_number();
    let pendants = tree.pendant_count();
    if pendants != tree.n() - nu {
        return Err(Error::PendantStructure(format!(
            "{what} input tree has {pendants} pendant vertices but needs exactly n - nu = {}",
            tree.n() - nu
        )));
    }
    Ok(nu)
}

fn pendant_neighbor_in_base(base: &Graph, u: usize, what: &str) -> Result<usize> {
    base.neighbors(u)
        .iter()
        .copied()
        .find(|&v| base.degree(v) == 1)
        .ok_or_else(|| {
            Error::PendantStructure(format!(
                "{what} requires a pendant neighbor of the marked vertex inside the base tree"
            ))
        })
}

fn build_f5(base: &Graph, u: usize, r: usize) -> Result<(Graph, Graph)> {
    check_base(base, u, 2, "f5")?;
    if r < 2 {
        return Err(Error::TransformParameter(format!(
            "f5 requires r >= 2 (got r = {r})"
        )));
    }
    let k = base.n();
    let total = k + r + 1;
    // Before: hub at label k adjacent to u, carrying r leaves.
    let mut before_edges = base.edges().to_vec();
    before_edges.push((u, k));
    for i in 0..r {
        before_edges.push((k, k + 1 + i));
    }
    let before = Graph::from_edges(total, before_edges)?;
    check_pendant_structure(&before, "f5")?;
    pendant_neighbor_in_base(base, u, "f5")?;
    // After: r-1 leaves directly at u plus one pendant 2-path at u.
    let mut after_edges = base.edges().to_vec();
    for i in 0..r - 1 {
        after_edges.push((u, k + i));
    }
    after_edges.push((u, k + r - 1));
    after_edges.push((k + r - 1, k + r));
    Ok((before, Graph::from_edges(total, after_edges)?))
}

fn build_f6(base: &Graph, u: usize, s: usize, t: usize) -> Result<(Graph, Graph)> {
    check_base(base, u, 2, "f6")?;
    if s < 1 || t < 1 {
        return Err(Error::TransformParameter(format!(
            "f6 requires s >= 1 and t >= 1 (got s = {s}, t = {t})"
        )));
    }
    let k = base.n();
    let total = k + 1 + s + 2 * t;
    // Before: intermediate vertex z = k adjacent to u, carrying s leaves
    // and t pendant 2-paths.
    let mut before_edges = base.edges().to_vec();
    before_edges.push((u, k));
    for i in 0..s {
        before_edges.push((k, k + 1 + i));
    }
    for i in 0..t {
        let a = k + s + 1 + 2 * i;
        before_edges.push((k, a));
        before_edges.push((a, a + 1));
    }
    let before = Graph::from_edges(total, before_edges)?;
    check_pendant_structure(&before, "f6")?;
    pendant_neighbor_in_base(base, u, "f6")?;
    // After: s-1 leaves and t+1 pendant 2-paths directly at u.
    let mut after_edges = base.edges().to_vec();
    for i in 0..s - 1 {
        after_edges.push((u, k + i));
    }
    for i in 0..t + 1 {
        let a = k + s - 1 + 2 * i;
        after_edges.push((u, a));
        after_edges.push((a, a + 1));
    }
    Ok((before, Graph::from_edges(total, after_edges)?))
}

/// Complement matching counts, always through the analytic transform.
pub(crate) fn complement_counts(g: &Graph) -> MatchingVector {
    lovasz_transform(&matching_counts(g)).expect("matching vectors of graphs are realizable")
}

/// Dominance verdict for a transformation instance.
#[derive(Clone, Debug, Serialize)]
pub struct DominanceReport {
    /// Quasi-order relation of the *after* complement against the *before*
    /// complement.
    pub relation: QuasiOrderResult,
    /// Whether before and after are isomorphic trees.
    pub isomorphic: bool,
    /// True if the relation is strict in the theorem's direction, or the
    /// pair is isomorphic and the relation is equality.
    pub matches_theorem: bool,
}

/// Compares complement matching vectors of before/after in the quasi-order.
pub fn check_dominance(res: &TransformResult) -> DominanceReport {
    let before_bar = complement_counts(&res.before);
    let after_bar = complement_counts(&res.after);
    let relation =
        quasi_compare(&after_bar, &before_bar).expect("before/after share the vertex count");
    let isomorphic = canonical_code(&res.before).expect("before is a tree")
        == canonical_code(&res.after).expect("after is a tree");
    let expected_strict = if res.spec.kind().complement_increases() {
        matches!(relation, QuasiOrderResult::StrictlyGreater { .. })
    } else {
        matches!(relation, QuasiOrderResult::StrictlyLess { .. })
    };
    let matches_theorem = expected_strict || (isomorphic && relation == QuasiOrderResult::Equal);
    DominanceReport {
        relation,
        isomorphic,
        matches_theorem,
    }
}

/// One failing index of a difference identity, with both sides.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityMismatch {
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of evaluating a transformation's exact difference identity at
/// every index.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<IdentityMismatch>,
}

/// Evaluates the kind's exact identity for the complement count difference
/// `m(before-bar, r) - m(after-bar, r)` against the prescribed forest
/// complements, in exact integer arithmetic at every index.
pub fn check_difference_identity(res: &TransformResult) -> IdentityReport {
    let before_bar = complement_counts(&res.before);
    let after_bar = complement_counts(&res.after);
    let half = res.before.n() / 2;
    let rhs = rhs_values(res, half);
    for (r, expected) in rhs.iter().enumerate() {
        let lhs = BigInt::from(before_bar.get(r)) - BigInt::from(after_bar.get(r));
        if lhs != *expected {
            return IdentityReport {
                holds: false,
                first_mismatch: Some(IdentityMismatch {
                    index: r,
                    lhs: lhs.to_string(),
                    rhs: expected.to_string(),
                }),
            };
        }
    }
    IdentityReport {
        holds: true,
        first_mismatch: None,
    }
}

/// Complement counts of a forest given as disjoint parts.
fn forest_complement(parts: &[Graph]) -> MatchingVector {
    let mut acc = MatchingVector::new(0, vec![num_bigint::BigUint::from(1u32)])
        .expect("empty vector is valid");
    for p in parts {
        acc = disjoint_union_counts(&acc, &matching_counts(p));
    }
    lovasz_transform(&acc).expect("forest counts are realizable")
}

/// `m(w, r - shift)` as a signed integer, zero outside range.
fn shifted(w: &MatchingVector, r: usize, shift: usize) -> BigInt {
    if r < shift {
        BigInt::zero()
    } else {
        BigInt::from(w.get(r - shift))
    }
}

fn rhs_values(res: &TransformResult, half: usize) -> Vec<BigInt> {
    match &res.spec {
        TransformSpec::F1 { base, u, m, n } => {
            // -(sum over T0-neighbors v of u) m(complement((T0-u-v) u P_{m-1} u P_{n-1}), r-2)
            let vecs: Vec<MatchingVector> = base
                .neighbors(*u)
                .iter()
                .map(|&v| {
                    forest_complement(&[
                        base.without_vertices(&[*u, v]),
                        path_graph(m - 1),
                        path_graph(n - 1),
                    ])
                })
                .collect();
            (0..=half)
                .map(|r| -vecs.iter().map(|w| shifted(w, r, 2)).sum::<BigInt>())
                .collect()
        }
        TransformSpec::F2 { m, n, s } => {
            let w = forest_complement(&[path_graph(m - 2), path_graph(n - 1), path_graph(s - 2)]);
            (0..=half).map(|r| -shifted(&w, r, 3)).collect()
        }
        TransformSpec::F3 { m, n } => {
            let w = forest_complement(&[path_graph(m - n)]);
            (0..=half).map(|r| -shifted(&w, r, n + 1)).collect()
        }
        TransformSpec::F4 { left, u, right, v } => {
            // +(sum over neighbor pairs) m(complement((T1'-u-ui) u (T2'-v-vj)), r-2)
            let mut vecs = Vec::new();
            for &ui in left.neighbors(*u) {
                for &vj in right.neighbors(*v) {
                    vecs.push(forest_complement(&[
                        left.without_vertices(&[*u, ui]),
                        right.without_vertices(&[*v, vj]),
                    ]));
                }
            }
            (0..=half)
                .map(|r| vecs.iter().map(|w| shifted(w, r, 2)).sum::<BigInt>())
                .collect()
        }
        TransformSpec::F5 { base, u, r: arms } => {
            // +(arms-1) * (sum over T0-neighbors v != v' of u)
            //   m(complement((arms-1) P_1 u (T0-u-v)), k-2)
            let vprime =
                pendant_neighbor_in_base(base, *u, "f5").expect("validated by apply_transform");
            let isolated = Graph::empty(arms - 1);
            let vecs: Vec<MatchingVector> = base
                .neighbors(*u)
                .iter()
                .filter(|&&v| v != vprime)
                .map(|&v| forest_complement(&[isolated.clone(), base.without_vertices(&[*u, v])]))
                .collect();
            let factor = BigInt::from(arms - 1);
            (0..=half)
                .map(|k| &factor * vecs.iter().map(|w| shifted(w, k, 2)).sum::<BigInt>())
                .collect()
        }
        TransformSpec::F6 { base, u, s, t } => {
            // +(s+t-1) * sum m(complement((s-1)P_1 u tP_2 u (T0-u-v)), r-2)
            // + t * sum m(complement((s-1)P_1 u (t-1)P_2 u (T0-u-v)), r-3)
            let vprime =
                pendant_neighbor_in_base(base, *u, "f6").expect("validated by apply_transform");
            let neighbors: Vec<usize> = base
                .neighbors(*u)
                .iter()
                .copied()
                .filter(|&v| v != vprime)
                .collect();
            let with_paths = |leaves: usize, paths: usize, v: usize| {
                let mut parts = vec![Graph::empty(leaves)];
                for _ in 0..paths {
                    parts.push(path_graph(2));
                }
                parts.push(base.without_vertices(&[*u, v]));
                forest_complement(&parts)
            };
            let first: Vec<MatchingVector> = neighbors
                .iter()
                .map(|&v| with_paths(s - 1, *t, v))
                .collect();
            let second: Vec<MatchingVector> = neighbors
                .iter()
                .map(|&v| with_paths(s - 1, t - 1, v))
                .collect();
            let f1 = BigInt::from(s + t - 1);
            let f2 = BigInt::from(*t);
            (0..=half)
                .map(|r| {
                    &f1 * first.iter().map(|w| shifted(w, r, 2)).sum::<BigInt>()
                        + &f2 * second.iter().map(|w| shifted(w, r, 3)).sum::<BigInt>()
                })
                .collect()
        }
    }
}

/// Draws a random valid spec of the given kind with total order at most
/// `max_total` (>= 8 recommended). Deterministic for a fixed RNG state.
pub fn sample_spec<R: Rng>(kind: TransformKind, max_total: usize, rng: &mut R) -> TransformSpec {
    use crate::enumerate::random_tree;
    match kind {
        TransformKind::F1 => {
            let k = rng.random_range(2..=max_total - 2);
            let base = random_tree(k, rng);
            let u = rng.random_range(0..k);
            let m = rng.random_range(1..=max_total - k - 1);
            let n = rng.random_range(1..=max_total - k - m);
            TransformSpec::F1 { base, u, m, n }
        }
        TransformKind::F2 => {
            // m+n+s+1 <= max_total with s >= m >= 2, n >= 1
            let m = rng.random_range(2..=(max_total - 2) / 2);
            let s = rng.random_range(m..=max_total - m - 2);
            let n = rng.random_range(1..=max_total - m - s - 1);
            TransformSpec::F2 { m, n, s }
        }
        TransformKind::F3 => {
            let n = rng.random_range(2..=(max_total - 2) / 2);
            let m = rng.random_range(n..=max_total - n - 2);
            TransformSpec::F3 { m, n }
        }
        TransformKind::F4 => {
            let m = rng.random_range(2..=max_total - 2);
            let n = rng.random_range(2..=max_total - m);
            let left = random_tree(m, rng);
            let right = random_tree(n, rng);
            let u = rng.random_range(0..m);
            let v = rng.random_range(0..n);
            TransformSpec::F4 { left, u, right, v }
        }
        TransformKind::F5 => {
            for _ in 0..200 {
                let k = rng.random_range(2..=max_total - 3);
                let base = random_tree(k, rng);
                let u = rng.random_range(0..k);
                let r = rng.random_range(2..=max_total - k - 1);
                let spec = TransformSpec::F5 { base, u, r };
                if apply_transform(&spec).is_ok() {
                    return spec;
                }
            }
            // A star base with the hub marked is always structurally valid.
            let k = rng.random_range(2..=max_total - 3);
            let r = rng.random_range(2..=max_total - k - 1);
            TransformSpec::F5 {
                base: crate::families::star_graph(k),
                u: 0,
                r,
            }
        }
        TransformKind::F6 => {
            for _ in 0..200 {
                let k = rng.random_range(2..=max_total - 4);
                let base = random_tree(k, rng);
                let u = rng.random_range(0..k);
                let s = rng.random_range(1..=max_total - k - 3);
                let t = rng.random_range(1..=(max_total - k - 1 - s) / 2);
                let spec = TransformSpec::F6 { base, u, s, t };
                if apply_transform(&spec).is_ok() {
                    return spec;
                }
            }
            let k = rng.random_range(2..=max_total - 4);
            let s = rng.random_range(1..=max_total - k - 3);
            let t = rng.random_range(1..=(max_total - k - 1 - s) / 2);
            TransformSpec::F6 {
                base: crate::families::star_graph(k),
                u: 0,
                s,
                t,
            }
        }
    }
}
