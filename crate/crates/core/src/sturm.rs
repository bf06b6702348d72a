//! Exact real-root isolation for integer polynomials with positive roots.
//!
//! Used on the y = x^2 image of matching polynomials: factor by
//! multiplicity (Yun), isolate distinct roots with Sturm sequences on exact
//! integer coefficients, then bisect each isolating interval with exact
//! dyadic arithmetic. No floating point enters until the final interval is
//! converted to an f64 value-plus-bound pair.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Dense integer polynomial, ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct IntPoly {
    c: Vec<BigInt>,
}

impl IntPoly {
    pub(crate) fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IntPoly { c }
    }

    pub(crate) fn zero() -> Self {
        IntPoly { c: Vec::new() }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub(crate) fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn lc(&self) -> &BigInt {
        self.c.last().expect("nonzero polynomial")
    }

    pub(crate) fn derivative(&self) -> IntPoly {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| x * BigInt::from(i))
            .collect();
        IntPoly::new(c)
    }

    fn content(&self) -> BigUint {
        let mut g = BigUint::zero();
        for x in &self.c {
            g = g.gcd(x.magnitude());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the (positive) content; sign pattern preserved.
    fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = BigInt::from(self.content());
        IntPoly::new(self.c.iter().map(|x| x / &g).collect())
    }

    fn neg(&self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|x| -x).collect())
    }

    /// Pseudo-remainder of `self` by `g`, normalized so the result equals a
    /// *positive* multiple of `self` reduced mod `g`.
    fn pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        let dg = g.degree();
        let lg = g.lc().clone();
        let mut r = self.c.clone();
        let mut flips = 0usize;
        while r.len() > dg {
            let dr = r.len() - 1;
            let lr = r.last().unwrap().clone();
            if lr.is_zero() {
                r.pop();
                continue;
            }
            // r <- lg*r - lr*x^(dr-dg)*g; cancels the leading term exactly.
            for x in r.iter_mut() {
                *x *= &lg;
            }
            if lg.sign() == Sign::Minus {
                flips += 1;
            }
            let shift = dr - dg;
            for (i, gc) in g.c.iter().enumerate() {
                let t = &lr * gc;
                r[i + shift] -= t;
            }
            debug_assert!(r[dr].is_zero());
            r.pop();
        }
        let mut rem = IntPoly::new(r);
        if flips % 2 == 1 {
            rem = rem.neg();
        }
        rem
    }

    /// Exact division; panics if `g` does not divide `self`.
    fn div_exact(&self, g: &IntPoly) -> IntPoly {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut r = self.c.clone();
        let dg = g.degree();
        let lg = g.lc();
        let mut q = vec![BigInt::zero(); self.degree() - dg + 1];
        for qi in (0..q.len()).rev() {
            let top = r[qi + dg].clone();
            if top.is_zero() {
                continue;
            }
            let (coef, rem) = top.div_rem(lg);
            assert!(rem.is_zero(), "non-exact polynomial division");
            for (i, gc) in g.c.iter().enumerate() {
                let t = &coef * gc;
                r[qi + i] -= t;
            }
            q[qi] = coef;
        }
        assert!(
            r.iter().all(BigInt::is_zero),
            "non-exact polynomial division"
        );
        IntPoly::new(q)
    }

    /// Primitive gcd via the primitive pseudo-remainder sequence, normalized
    /// to a positive leading coefficient.
    fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        if !a.is_zero() && a.lc().sign() == Sign::Minus {
            a.neg()
        } else {
            a
        }
    }

    /// Sign of `p(num / 2^exp)` as -1, 0 or 1, computed exactly.
    pub(crate) fn sign_at(&self, point: &Dyadic) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let d = self.degree();
        let mut acc = self.c[d].clone();
        for i in (0..d).rev() {
            acc = acc * &point.num + (&self.c[i] << (point.exp as usize * (d - i)));
        }
        match acc.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }
}

/// Yun squarefree decomposition: returns `(factor, multiplicity)` pairs with
/// each factor squarefree and the product of `factor^multiplicity` equal to
/// the primitive part of the input.
pub(crate) fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, usize)> {
    let f = f.primitive();
    if f.degree() == 0 {
        return Vec::new();
    }
    let fp = f.derivative();
    let g = f.gcd(&fp);
    if g.degree() == 0 {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut c = f.div_exact(&g);
    let mut d = sub(&fp.div_exact(&g), &c.derivative());
    let mut mult = 1usize;
    while c.degree() > 0 {
        let a = c.gcd(&d);
        if a.degree() > 0 {
            out.push((a.clone(), mult));
        }
        c = c.div_exact(&a);
        d = sub(&d.div_exact(&a), &c.derivative());
        mult += 1;
    }
    out
}

fn sub(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let len = a.c.len().max(b.c.len());
    let mut c = vec![BigInt::zero(); len];
    for (i, x) in a.c.iter().enumerate() {
        c[i] += x;
    }
    for (i, x) in b.c.iter().enumerate() {
        c[i] -= x;
    }
    IntPoly::new(c)
}

/// Nonnegative dyadic rational `num / 2^exp`.
#[derive(Clone, Debug)]
pub(crate) struct Dyadic {
    pub(crate) num: BigInt,
    pub(crate) exp: u32,
}

impl Dyadic {
    pub(crate) fn from_int(v: u64) -> Self {
        Dyadic {
            num: BigInt::from(v),
            exp: 0,
        }
    }

    fn normalize(mut self) -> Self {
        while self.exp > 0 && self.num.is_even() && !self.num.is_zero() {
            self.num >>= 1;
            self.exp -= 1;
        }
        if self.num.is_zero() {
            self.exp = 0;
        }
        self
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let exp = a.exp.max(b.exp);
        let na = &a.num << (exp - a.exp) as usize;
        let nb = &b.num << (exp - b.exp) as usize;
        Dyadic {
            num: na + nb,
            exp: exp + 1,
        }
        .normalize()
    }

    /// Interior point at `a + (b - a) * k / 2^bits`.
    fn interior(a: &Dyadic, b: &Dyadic, k: u64, bits: u32) -> Dyadic {
        let exp = a.exp.max(b.exp);
        let na = &a.num << (exp - a.exp) as usize;
        let nb = &b.num << (exp - b.exp) as usize;
        let diff = nb - &na;
        Dyadic {
            num: (na << bits as usize) + diff * BigInt::from(k),
            exp: exp + bits,
        }
        .normalize()
    }

    pub(crate) fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let v = self.num.to_f64().unwrap_or(f64::MAX);
        v * 2f64.powi(-(self.exp as i32))
    }
}

/// An isolated root: an exact dyadic interval `[lo, hi]` (possibly a point)
/// containing exactly one distinct root of the factor, with multiplicity.
pub(crate) struct IsolatedRoot {
    pub(crate) lo: Dyadic,
    pub(crate) hi: Dyadic,
    pub(crate) multiplicity: usize,
}

/// Isolates and refines all positive real roots of `poly` (with
/// multiplicities) until each interval maps to an x = sqrt(y) interval
/// narrower than `x_width`. Returns roots sorted ascending.
///
/// The caller guarantees all complex roots of `poly` are real and positive
/// (true for the y-image of a matching polynomial); the root count is
/// checked and an error string returned on mismatch.
pub(crate) fn isolate_positive_roots(
    poly: &IntPoly,
    x_width: f64,
) -> Result<Vec<IsolatedRoot>, String> {
    let mut roots: Vec<IsolatedRoot> = Vec::new();
    let mut found = 0usize;
    for (factor, mult) in squarefree_decomposition(poly) {
        let isolated = isolate_squarefree(&factor)?;
        if isolated.len() != factor.degree() {
            return Err(format!(
                "found {} real positive roots of a degree-{} factor",
                isolated.len(),
                factor.degree()
            ));
        }
        found += mult * isolated.len();
        for (lo, hi) in isolated {
            let (lo, hi) = refine(&factor, lo, hi, x_width);
            roots.push(IsolatedRoot {
                lo,
                hi,
                multiplicity: mult,
            });
        }
    }
    if found != poly.degree() {
        return Err(format!(
            "isolated {} roots of a degree-{} polynomial",
            found,
            poly.degree()
        ));
    }
    roots.sort_by(|a, b| a.lo.to_f64().total_cmp(&b.lo.to_f64()));
    Ok(roots)
}

/// Sturm isolation of the distinct roots of a squarefree factor in (0, B].
fn isolate_squarefree(f: &IntPoly) -> Result<Vec<(Dyadic, Dyadic)>, String> {
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    if f.c[0].is_zero() {
        return Err("unexpected zero root in the reduced polynomial".into());
    }
    let chain = sturm_chain(f);
    let bound = cauchy_bound(f);
    let lo = Dyadic::from_int(0);
    let vlo = variations(&chain, &lo);
    let vhi = variations(&chain, &bound);
    let mut out = Vec::new();
    subdivide(f, &chain, lo, bound, vlo, vhi, &mut out, 0)?;
    out.sort_by(|a, b| a.0.to_f64().total_cmp(&b.0.to_f64()));
    Ok(out)
}

fn sturm_chain(f: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![f.primitive(), f.derivative().primitive()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[k - 1].degree() == 0 {
            break;
        }
        let r = chain[k - 2].pseudo_rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().primitive());
    }
    chain
}

fn variations(chain: &[IntPoly], at: &Dyadic) -> usize {
    let mut count = 0;
    let mut last = 0;
    for p in chain {
        let s = p.sign_at(at);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

#[allow(clippy::too_many_arguments)]
fn subdivide(
    f: &IntPoly,
    chain: &[IntPoly],
    lo: Dyadic,
    hi: Dyadic,
    vlo: usize,
    vhi: usize,
    out: &mut Vec<(Dyadic, Dyadic)>,
    depth: u32,
) -> Result<(), String> {
    let count = vlo.saturating_sub(vhi);
    if count == 0 {
        return Ok(());
    }
    if count == 1 {
        out.push((lo, hi));
        return Ok(());
    }
    if depth > 512 {
        return Err("isolation did not separate the roots".into());
    }
    // Pick an interior non-root split point; f has at most deg(f) roots so
    // one of deg(f)+1 distinct candidates must work.
    let candidates = f.degree() as u64 + 1;
    let bits = 64 - candidates.leading_zeros();
    let mut split = None;
    let mid = Dyadic::midpoint(&lo, &hi);
    if f.sign_at(&mid) != 0 {
        split = Some(mid);
    } else {
        for k in 1..=candidates {
            let cand = Dyadic::interior(&lo, &hi, k, bits);
            if f.sign_at(&cand) != 0 {
                split = Some(cand);
                break;
            }
        }
    }
    let split = split.expect("an interior non-root point exists");
    let vmid = variations(chain, &split);
    subdivide(f, chain, lo, split.clone(), vlo, vmid, out, depth + 1)?;
    subdivide(f, chain, split, hi, vmid, vhi, out, depth + 1)
}

/// Power-of-two bound strictly above every root magnitude.
fn cauchy_bound(f: &IntPoly) -> Dyadic {
    let lead = f.lc().magnitude().clone();
    let mut max_ratio_bits = 0u64;
    for c in &f.c[..f.degree()] {
        if c.is_zero() {
            continue;
        }
        // ceil(|c| / lead) <= 2^(bits(|c|) - bits(lead) + 1)
        let bits = (c.magnitude().bits() + 1).saturating_sub(lead.bits()) + 1;
        max_ratio_bits = max_ratio_bits.max(bits);
    }
    Dyadic {
        num: BigInt::one() << (max_ratio_bits as usize + 1),
        exp: 0,
    }
}

/// Bisects a sign-changing interval around a simple root until the implied
/// sqrt interval is narrower than `x_width` (or the dyadic hits the root
/// exactly, or f64 resolution is reached).
fn refine(f: &IntPoly, mut lo: Dyadic, mut hi: Dyadic, x_width: f64) -> (Dyadic, Dyadic) {
    let mut s_lo = f.sign_at(&lo);
    debug_assert_ne!(s_lo, 0);
    debug_assert_ne!(f.sign_at(&hi), 0);
    for _ in 0..700 {
        let xlo = lo.to_f64().max(0.0).sqrt();
        let xhi = hi.to_f64().sqrt();
        if xhi - xlo <= x_width {
            break;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        let s = f.sign_at(&mid);
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == s_lo {
            lo = mid;
            s_lo = s;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}
