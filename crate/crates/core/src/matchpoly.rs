//! Exact matching counts `m(G,k)`, matching polynomials and the Hosoya index.
//!
//! Trees take an O(n^2) rooted dynamic program. General graphs take the
//! vertex-deletion recursion with memoization on induced-subgraph bitmasks
//! and per-component convolution; that route is exponential-state in the
//! worst case and is meant for oracle-scale orders (it is the reference
//! route for dense complements).

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::graph::Graph;
use crate::{Error, Result};

/// The sequence `m(G,0), m(G,1), ..., m(G, floor(n/2))` of matching counts,
/// stored with trailing zeros so indices stay aligned across graphs of equal
/// order.
#[derive(Clone, PartialEq, Eq)]
pub struct MatchingVector {
    n: usize,
    counts: Vec<BigUint>,
}

impl MatchingVector {
    /// Wraps a raw count sequence, checking the structural invariants:
    /// length exactly `floor(n/2)+1` and `counts[0] == 1`.
    pub fn new(n: usize, counts: Vec<BigUint>) -> Result<Self> {
        if counts.len() != n / 2 + 1 {
            return Err(Error::InvalidMatchingVector(format!(
                "expected {} entries for order {}, got {}",
                n / 2 + 1,
                n,
                counts.len()
            )));
        }
        if counts[0] != BigUint::one() {
            return Err(Error::InvalidMatchingVector(
                "entry 0 must be 1 (the empty matching)".into(),
            ));
        }
        Ok(MatchingVector { n, counts })
    }

    fn from_trimmed(n: usize, mut counts: Vec<BigUint>) -> Self {
        counts.resize(n / 2 + 1, BigUint::zero());
        MatchingVector { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `m(G,k)`, zero outside the stored range.
    pub fn get(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Largest `k` with `m(G,k) != 0`; this is `nu(G)` for genuine graphs.
    pub fn max_nonzero_index(&self) -> usize {
        self.counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }
}

impl fmt::Debug for MatchingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m(n={}; {:?})", self.n, self.counts)
    }
}

impl Serialize for MatchingVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Counts exceed 64 bits for dense complements; serialize as decimal strings.
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MatchingVector", 2)?;
        st.serialize_field("n", &self.n)?;
        let strings: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        st.serialize_field("counts", &strings)?;
        st.end()
    }
}

/// The matching polynomial: coefficients of
/// `sum_k (-1)^k m(G,k) x^(n-2k)`, stored ascending in the power of `x`.
/// Monic of degree `n`, zero at every parity-mismatched power.
#[derive(Clone, PartialEq, Eq)]
pub struct MatchingPolynomial {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl MatchingPolynomial {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Ascending coefficients; index `j` holds the coefficient of `x^j`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Validates an ascending coefficient sequence as a matching polynomial:
    /// monic, alternating signs on the `x^(n-2k)` lattice, zero elsewhere,
    /// and no internal zero before the last nonzero count.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.last().unwrap() != &BigInt::one() {
            return Err(Error::InvalidPolynomial("must be monic".into()));
        }
        let n = coeffs.len() - 1;
        let mut counts = Vec::with_capacity(n / 2 + 1);
        for (j, c) in coeffs.iter().enumerate() {
            let offset = n - j;
            if offset % 2 == 1 {
                if !c.is_zero() {
                    return Err(Error::InvalidPolynomial(format!(
                        "coefficient of x^{j} must vanish for a graph on {n} vertices"
                    )));
                }
            } else {
                let k = offset / 2;
                let expected_sign = if k.is_multiple_of(2) { 1 } else { -1 };
                if !c.is_zero() && c.sign() != BigInt::from(expected_sign).sign() {
                    return Err(Error::InvalidPolynomial(format!(
                        "coefficient of x^{j} has the wrong sign for a {k}-matching count"
                    )));
                }
                counts.push(c.magnitude().clone());
            }
        }
        counts.reverse(); // now indexed by k
        let last_nonzero = counts.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        if counts[..=last_nonzero].iter().any(|c| c.is_zero()) {
            return Err(Error::InvalidPolynomial(
                "matching counts cannot have internal zeros".into(),
            ));
        }
        Ok(MatchingPolynomial { n, coeffs })
    }

    /// The matching counts encoded in the coefficients.
    pub fn matching_vector(&self) -> MatchingVector {
        let counts: Vec<BigUint> = (0..=self.n / 2)
            .map(|k| self.coeffs[self.n - 2 * k].magnitude().clone())
            .collect();
        MatchingVector { n: self.n, counts }
    }
}

impl fmt::Debug for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu(deg {}; {:?})", self.n, self.coeffs)
    }
}

impl fmt::Display for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for j in (0..=self.n).rev() {
            let c = &self.coeffs[j];
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == num_bigint::Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == num_bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != &BigUint::one() || j == 0 {
                write!(f, "{mag}")?;
            }
            match j {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Exact matching counts of `g`, dispatching to the forest fast path when
/// possible and the memoized vertex recursion otherwise.
pub fn matching_counts(g: &Graph) -> MatchingVector {
    if g.is_forest() {
        let mut acc = vec![BigUint::one()];
        for comp in g.connected_components() {
            let sub = g.induced(&comp);
            acc = convolve(&acc, &tree_counts_raw(&sub));
        }
        MatchingVector::from_trimmed(g.n(), acc)
    } else {
        matching_counts_general(g)
    }
}

/// Rooted dynamic program over a tree: per vertex, count matchings of its
/// subtree with the vertex free or matched into the subtree.
fn tree_counts_raw(tree: &Graph) -> Vec<BigUint> {
    let n = tree.n();
    if n == 0 {
        return vec![BigUint::one()];
    }
    // Iterative post-order from root 0.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in tree.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    // free[v][k]: k-matchings of subtree(v) leaving v unmatched;
    // taken[v][k]: v matched to one of its children.
    let mut free: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]; n];
    let mut taken: Vec<Vec<BigUint>> = vec![vec![BigUint::zero()]; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            let p = parent[v];
            let either = add(&free[v], &taken[v]);
            let new_free = convolve(&free[p], &either);
            let mut new_taken = convolve(&taken[p], &either);
            let matched_here = shift1(&convolve(&free[p], &free[v]));
            new_taken = add(&new_taken, &matched_here);
            free[p] = new_free;
            taken[p] = new_taken;
        }
    }
    add(&free[0], &taken[0])
}

/// Vertex recursion (delete a vertex / delete it with a matched neighbor)
/// memoized on induced-subgraph bitmasks, splitting into components first.
///
/// Subproblems of an induced subgraph are induced subgraphs again, so the
/// bitmask identifies each state exactly. Supports n <= 64; intended for
/// oracle-scale inputs.
pub fn matching_counts_general(g: &Graph) -> MatchingVector {
    assert!(
        g.n() <= 64,
        "general matching-count recursion supports at most 64 vertices"
    );
    let full: u64 = if g.n() == 64 {
        u64::MAX
    } else {
        (1u64 << g.n()) - 1
    };
    let mut memo: HashMap<u64, Vec<BigUint>> = HashMap::new();
    let counts = counts_of_mask(g, full, &mut memo);
    MatchingVector::from_trimmed(g.n(), counts)
}

fn counts_of_mask(g: &Graph, mask: u64, memo: &mut HashMap<u64, Vec<BigUint>>) -> Vec<BigUint> {
    if mask == 0 {
        return vec![BigUint::one()];
    }
    let mut acc = vec![BigUint::one()];
    let mut rest = mask;
    while rest != 0 {
        let comp = component_mask(g, rest);
        rest &= !comp;
        let part = component_counts(g, comp, memo);
        acc = convolve(&acc, &part);
    }
    acc
}

fn component_counts(g: &Graph, comp: u64, memo: &mut HashMap<u64, Vec<BigUint>>) -> Vec<BigUint> {
    if let Some(hit) = memo.get(&comp) {
        return hit.clone();
    }
    // Branch on a maximum-degree vertex of the component.
    let mut pivot = usize::MAX;
    let mut best = 0usize;
    let mut m = comp;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let deg = g
            .neighbors(v)
            .iter()
            .filter(|&&w| comp >> w & 1 == 1)
            .count();
        if deg >= best {
            best = deg;
            pivot = v;
        }
    }
    if best == 0 {
        // Isolated vertices only.
        return vec![BigUint::one()];
    }
    let without = counts_of_mask(g, comp & !(1 << pivot), memo);
    let mut total = without;
    for &w in g.neighbors(pivot) {
        if comp >> w & 1 == 1 {
            let sub = counts_of_mask(g, comp & !(1 << pivot) & !(1 << w), memo);
            total = add(&total, &shift1(&sub));
        }
    }
    memo.insert(comp, total.clone());
    total
}

fn component_mask(g: &Graph, mask: u64) -> u64 {
    let start = mask.trailing_zeros() as usize;
    let mut comp = 1u64 << start;
    let mut frontier = vec![start];
    while let Some(u) = frontier.pop() {
        for &v in g.neighbors(u) {
            if mask >> v & 1 == 1 && comp >> v & 1 == 0 {
                comp |= 1 << v;
                frontier.push(v);
            }
        }
    }
    comp
}

/// Edge recursion with no memoization: counts of `g` split on one edge as
/// "edge unused" plus "edge in the matching". The identity route used in
/// tests against the vertex recursion; exponential, tiny inputs only.
pub fn matching_counts_edge_recursion(g: &Graph) -> MatchingVector {
    fn rec(edges: &[(usize, usize)]) -> Vec<BigUint> {
        let Some(&(u, v)) = edges.first() else {
            return vec![BigUint::one()];
        };
        let rest = &edges[1..];
        let skip = rec(rest);
        let keep: Vec<(usize, usize)> = rest
            .iter()
            .copied()
            .filter(|&(a, b)| a != u && a != v && b != u && b != v)
            .collect();
        add(&skip, &shift1(&rec(&keep)))
    }
    MatchingVector::from_trimmed(g.n(), rec(g.edges()))
}

/// Counts of a disjoint union: the convolution of the two count sequences.
pub fn disjoint_union_counts(a: &MatchingVector, b: &MatchingVector) -> MatchingVector {
    MatchingVector::from_trimmed(a.n + b.n, convolve(&a.counts, &b.counts))
}

/// The matching polynomial assembled from a matching vector.
pub fn matching_polynomial(v: &MatchingVector) -> MatchingPolynomial {
    let n = v.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, m) in v.counts.iter().enumerate() {
        if n >= 2 * k {
            let mut c = BigInt::from(m.clone());
            if k % 2 == 1 {
                c = -c;
            }
            coeffs[n - 2 * k] = c;
        }
    }
    MatchingPolynomial { n, coeffs }
}

/// The Hosoya index `Z(G)`: the total number of matchings.
pub fn hosoya_index(v: &MatchingVector) -> BigUint {
    v.counts.iter().sum()
}

/// Matching counts of the path on `n` vertices by the closed form
/// `m(P_n, k) = C(n-k, k)`.
pub fn path_counts(n: usize) -> MatchingVector {
    let counts: Vec<BigUint> = (0..=n / 2).map(|k| binomial_small(n - k, k)).collect();
    MatchingVector { n, counts }
}

fn binomial_small(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    r
}

pub(crate) fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

pub(crate) fn add(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let len = a.len().max(b.len());
    let mut out = vec![BigUint::zero(); len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

fn shift1(a: &[BigUint]) -> Vec<BigUint> {
    let mut out = vec![BigUint::zero(); a.len() + 1];
    out[1..].clone_from_slice(a);
    out
}
