//! Matching energy by two independent routes, and the quasi-order on
//! matching vectors.
//!
//! The primary route extracts the (all-real) roots of the matching
//! polynomial exactly: factor out the zero root, substitute y = x^2, isolate
//! the positive y-roots with Sturm bisection on integer coefficients, and
//! take square roots with tracked error bounds. The cross-check route
//! evaluates the defining integral
//!
//! ```text
//! ME(G) = (2/pi) * integral_0^inf x^-2 ln( sum_k m(G,k) x^(2k) ) dx
//! ```
//!
//! by adaptive Gauss-Kronrod quadrature after an exact compactification of
//! the half line.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::matchpoly::{MatchingPolynomial, MatchingVector};
use crate::sturm::{isolate_positive_roots, IntPoly};
use crate::{Error, Result};

/// Default bisection width for root extraction (in the x variable).
pub const DEFAULT_ROOT_WIDTH: f64 = 1e-12;
/// Finest supported width; below this f64 output cannot represent the gain.
pub const ROOT_WIDTH_FLOOR: f64 = 1e-18;

/// A real number with a rigorous enclosure half-width.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Root {
    pub value: f64,
    pub bound: f64,
}

/// A computed energy with a rigorous bound on |computed - true|.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EnergyValue {
    pub value: f64,
    pub error_bound: f64,
}

/// Outcome of the entrywise comparison of two matching vectors, with
/// witness indices that re-certify the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum QuasiOrderResult {
    Equal,
    /// `a` dominates `b` with strict excess first seen at `witness`.
    StrictlyGreater {
        witness: usize,
    },
    StrictlyLess {
        witness: usize,
    },
    /// Strict in both directions: `a` exceeds at `greater_at`, falls short
    /// at `less_at`.
    Incomparable {
        greater_at: usize,
        less_at: usize,
    },
}

/// Entrywise quasi-order comparison. Both vectors must describe graphs of
/// the same order so the indices align.
pub fn quasi_compare(a: &MatchingVector, b: &MatchingVector) -> Result<QuasiOrderResult> {
    if a.n() != b.n() {
        return Err(Error::MismatchedOrder {
            left: a.n(),
            right: b.n(),
        });
    }
    let mut greater_at = None;
    let mut less_at = None;
    for (k, (x, y)) in a.counts().iter().zip(b.counts()).enumerate() {
        if x > y && greater_at.is_none() {
            greater_at = Some(k);
        }
        if x < y && less_at.is_none() {
            less_at = Some(k);
        }
    }
    Ok(match (greater_at, less_at) {
        (None, None) => QuasiOrderResult::Equal,
        (Some(w), None) => QuasiOrderResult::StrictlyGreater { witness: w },
        (None, Some(w)) => QuasiOrderResult::StrictlyLess { witness: w },
        (Some(g), Some(l)) => QuasiOrderResult::Incomparable {
            greater_at: g,
            less_at: l,
        },
    })
}

/// All n real roots of a matching polynomial, sorted ascending, each with a
/// rigorous enclosure half-width, at the default bisection width.
pub fn matching_roots(p: &MatchingPolynomial) -> Result<Vec<Root>> {
    matching_roots_to_width(p, DEFAULT_ROOT_WIDTH)
}

/// As [`matching_roots`] with an explicit target enclosure width.
pub fn matching_roots_to_width(p: &MatchingPolynomial, width: f64) -> Result<Vec<Root>> {
    // Re-validate the sign/parity structure, then work from the counts.
    let validated = MatchingPolynomial::from_coefficients(p.coefficients().to_vec())?;
    roots_from_counts(&validated.matching_vector(), width)
}

fn roots_from_counts(v: &MatchingVector, width: f64) -> Result<Vec<Root>> {
    if width < ROOT_WIDTH_FLOOR {
        return Err(Error::PrecisionTooFine {
            requested: width,
            floor: ROOT_WIDTH_FLOOR,
        });
    }
    let n = v.n();
    let top = v.max_nonzero_index();
    let zero_multiplicity = n - 2 * top;
    // q(y) = sum_{k<=top} (-1)^k m_k y^(top-k), monic with roots y = x^2 > 0.
    let coeffs: Vec<BigInt> = (0..=top)
        .map(|j| {
            let k = top - j;
            let mut c = BigInt::from(v.get(k));
            if k % 2 == 1 {
                c = -c;
            }
            c
        })
        .collect();
    let q = IntPoly::new(coeffs);
    let isolated = isolate_positive_roots(&q, width).map_err(Error::RootIsolation)?;

    let mut roots = Vec::with_capacity(n);
    let mut positive = Vec::new();
    for r in &isolated {
        let ylo = r.lo.to_f64().max(0.0);
        let yhi = r.hi.to_f64();
        let xlo = ylo.sqrt();
        let xhi = yhi.sqrt();
        let value = 0.5 * (xlo + xhi);
        // Enclosure half-width plus slack for the f64 conversions and sqrt.
        let bound = 0.5 * (xhi - xlo) + 4.0 * f64::EPSILON * xhi.max(1.0);
        for _ in 0..r.multiplicity {
            positive.push(Root { value, bound });
        }
    }
    for r in positive.iter().rev() {
        roots.push(Root {
            value: -r.value,
            bound: r.bound,
        });
    }
    for _ in 0..zero_multiplicity {
        roots.push(Root {
            value: 0.0,
            bound: 0.0,
        });
    }
    roots.extend(positive);
    Ok(roots)
}

/// Matching energy as the sum of absolute root values, with a rigorous
/// error bound, at the default bisection width.
pub fn matching_energy(v: &MatchingVector) -> Result<EnergyValue> {
    matching_energy_to_width(v, DEFAULT_ROOT_WIDTH)
}

/// As [`matching_energy`] with an explicit root enclosure width.
pub fn matching_energy_to_width(v: &MatchingVector, width: f64) -> Result<EnergyValue> {
    let roots = roots_from_counts(v, width)?;
    let mut value = 0.0;
    let mut bound = 0.0;
    for r in &roots {
        value += r.value.abs();
        bound += r.bound;
    }
    // Summation slack.
    bound += value * f64::EPSILON * roots.len() as f64;
    Ok(EnergyValue {
        value,
        error_bound: bound,
    })
}

/// Matching energy by numerical evaluation of the defining integral;
/// independent of the root route. Absolute error target 1e-6.
pub fn matching_energy_integral(v: &MatchingVector) -> Result<EnergyValue> {
    let coeffs: Vec<f64> = v
        .counts()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidMatchingVector(
            "counts overflow f64; the integral route needs smaller inputs".into(),
        ));
    }
    let top = v.max_nonzero_index();

    // Split the half line at x = 1 and invert the tail: with
    // S(x) = sum m_k x^(2k) and R(u) = u^(2 top) S(1/u) (the reversed
    // polynomial), the integral becomes
    //   I = int_0^1 ln S(x) / x^2 dx + int_0^1 ln R(u) du + 2*top,
    // and ME = (2/pi) I. Both integrands are analytic on [0,1].
    let m1 = coeffs.get(1).copied().unwrap_or(0.0);
    let s_at = |x: f64| -> f64 {
        let x2 = x * x;
        let mut acc = 0.0;
        for c in coeffs.iter().rev() {
            acc = acc * x2 + c;
        }
        acc
    };
    let r_at = |u: f64| -> f64 {
        let u2 = u * u;
        let mut acc = 0.0;
        for c in coeffs[..=top].iter() {
            acc = acc * u2 + c;
        }
        acc
    };
    let head = |x: f64| {
        if x == 0.0 {
            m1
        } else {
            s_at(x).ln() / (x * x)
        }
    };
    let tail = |u: f64| r_at(u).ln();

    let tol = 5e-8;
    let (i1, e1) = adaptive_gk15(&head, 0.0, 1.0, tol)?;
    let (i2, e2) = adaptive_gk15(&tail, 0.0, 1.0, tol)?;
    let total = i1 + i2 + 2.0 * top as f64;
    let value = core::f64::consts::FRAC_2_PI * total;
    let error_bound = core::f64::consts::FRAC_2_PI * (e1 + e2) + 1e-12 * value.abs().max(1.0);
    Ok(EnergyValue { value, error_bound })
}

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK values).
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += WGK[j] * (f1 + f2);
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let integral = kronrod * half;
    let err = ((kronrod - gauss) * half).abs();
    (integral, err)
}

fn adaptive_gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    fn rec<F: Fn(f64) -> f64>(
        f: &F,
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
    ) -> std::result::Result<(f64, f64), f64> {
        let (val, err) = gk15(f, a, b);
        if err <= tol || err < 1e-15 * val.abs() {
            return Ok((val, err));
        }
        if depth == 0 {
            return Err(err);
        }
        let mid = 0.5 * (a + b);
        let left = rec(f, a, mid, 0.5 * tol, depth - 1)?;
        let right = rec(f, mid, b, 0.5 * tol, depth - 1)?;
        Ok((left.0 + right.0, left.1 + right.1))
    }
    rec(f, a, b, tol, 40).map_err(|achieved| Error::Quadrature {
        achieved,
        requested: tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{families, matching_counts, matching_polynomial};

    fn energy_of(g: &crate::Graph) -> EnergyValue {
        matching_energy(&matching_counts(g)).unwrap()
    }

    #[test]
    fn simple_root_sets() {
        // x^2 - 1
        let k2 = matching_polynomial(&matching_counts(&families::path_graph(2)));
        let roots = matching_roots(&k2).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].value, -1.0);
        assert_eq!(roots[1].value, 1.0);

        // x^3 - 2x
        let p3 = matching_polynomial(&matching_counts(&families::path_graph(3)));
        let roots = matching_roots(&p3).unwrap();
        let expect = [-(2f64.sqrt()), 0.0, 2f64.sqrt()];
        for (r, e) in roots.iter().zip(expect) {
            assert!((r.value - e).abs() <= r.bound + 1e-12, "{} vs {e}", r.value);
        }

        // x^4 - 3x^2 + 1
        let p4 = matching_polynomial(&matching_counts(&families::path_graph(4)));
        let roots = matching_roots(&p4).unwrap();
        let phi = [1.618033988749895, 0.618033988749895];
        assert!((roots[3].value - phi[0]).abs() < 1e-9);
        assert!((roots[2].value - phi[1]).abs() < 1e-9);
    }

    #[test]
    fn energy_anchors() {
        assert_eq!(energy_of(&families::path_graph(2)).value, 2.0);
        let p3 = energy_of(&families::path_graph(3));
        assert!((p3.value - 2.0 * 2f64.sqrt()).abs() < 1e-9);
        let p4 = energy_of(&families::path_graph(4));
        assert!((p4.value - 2.0 * 5f64.sqrt()).abs() < 1e-9);
        assert!(p4.error_bound < 1e-9);
        let k1 = energy_of(&crate::Graph::empty(1));
        assert_eq!(k1.value, 0.0);
    }

    #[test]
    fn integral_route_matches_roots() {
        for g in [
            families::path_graph(2),
            families::path_graph(3),
            families::path_graph(4),
            crate::Graph::empty(1),
            families::star_graph(6).complement(),
            families::t_n_p(9, 4).unwrap(),
        ] {
            let v = matching_counts(&g);
            let root_route = matching_energy(&v).unwrap();
            let quad_route = matching_energy_integral(&v).unwrap();
            assert!(
                (root_route.value - quad_route.value).abs() <= 2e-6,
                "routes disagree: {} vs {}",
                root_route.value,
                quad_route.value
            );
        }
    }

    #[test]
    fn repeated_roots_counted_with_multiplicity() {
        // Two disjoint edges: mu = (x^2-1)^2.
        let g = crate::Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let roots = matching_roots(&matching_polynomial(&matching_counts(&g))).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots.iter().filter(|r| r.value == 1.0).count(), 2);
        let me = energy_of(&g);
        assert!((me.value - 4.0).abs() < 1e-12);
    }

    #[test]
    fn root_symmetry() {
        let t = families::t_n_2_1(9).unwrap();
        let roots = matching_roots(&matching_polynomial(&matching_counts(&t))).unwrap();
        let n = roots.len();
        for i in 0..n {
            let a = roots[i];
            let b = roots[n - 1 - i];
            assert!((a.value + b.value).abs() <= a.bound + b.bound + 1e-12);
        }
    }

    #[test]
    fn quasi_compare_cases() {
        let p5 = matching_counts(&families::path_graph(5));
        let star5 = matching_counts(&families::star_graph(5));
        assert_eq!(
            quasi_compare(&p5, &star5).unwrap(),
            QuasiOrderResult::StrictlyGreater { witness: 2 }
        );
        assert_eq!(quasi_compare(&p5, &p5).unwrap(), QuasiOrderResult::Equal);

        use num_bigint::BigUint;
        let a = MatchingVector::new(
            5,
            vec![1u32.into(), 5u32.into(), 2u32.into()]
                .into_iter()
                .collect::<Vec<BigUint>>(),
        )
        .unwrap();
        let b = MatchingVector::new(
            5,
            vec![1u32.into(), 4u32.into(), 3u32.into()]
                .into_iter()
                .collect::<Vec<BigUint>>(),
        )
        .unwrap();
        assert_eq!(
            quasi_compare(&a, &b).unwrap(),
            QuasiOrderResult::Incomparable {
                greater_at: 1,
                less_at: 2
            }
        );
        let p4 = matching_counts(&families::path_graph(4));
        assert!(quasi_compare(&p4, &p5).is_err());
    }

    #[test]
    fn rejects_malformed_polynomials() {
        use num_bigint::BigInt;
        let bad = MatchingPolynomial::from_coefficients(vec![
            BigInt::from(1),
            BigInt::from(0),
            BigInt::from(1),
        ]);
        assert!(bad.is_err());
    }

    #[test]
    fn precision_floor_enforced() {
        let v = matching_counts(&families::path_graph(4));
        assert!(matching_energy_to_width(&v, 1e-19).is_err());
        assert!(matching_energy_to_width(&v, 1e-15).is_ok());
    }
}
