//! The complement transform on matching vectors.
//!
//! For a graph G on n vertices,
//!
//! ```text
//! m(Gbar, r) = sum_{i=0}^{r} (-1)^i C(n-2i, 2r-2i) (2r-2i-1)!! m(G, i)
//! ```
//!
//! an exact linear relation with binomial and double-factorial weights; it
//! is its own inverse because complementation is. Complement counts are
//! always computed through it — never by running the matching recursion on
//! a dense complement (outside oracle tests), since this is O(n^2) exact
//! big-integer work regardless of density.

use std::cell::RefCell;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::matchpoly::MatchingVector;
use crate::{Error, Result};

thread_local! {
    static PASCAL: RefCell<Vec<Vec<BigUint>>> = const { RefCell::new(Vec::new()) };
    static DOUBLE_FACT: RefCell<Vec<BigUint>> = const { RefCell::new(Vec::new()) };
}

/// The odd double factorial `s!!` with `(-1)!! = 0!! = 1` and
/// `s!! = s * (s-2)!!`.
pub fn double_factorial(s: i64) -> Result<BigUint> {
    if s < -1 {
        return Err(Error::NegativeDoubleFactorial { s });
    }
    Ok(double_factorial_cached(s))
}

fn double_factorial_cached(s: i64) -> BigUint {
    if s <= 0 {
        return BigUint::one();
    }
    let s = s as usize;
    DOUBLE_FACT.with(|cell| {
        let mut table = cell.borrow_mut();
        if table.is_empty() {
            table.push(BigUint::one()); // 0!! (also covers (-1)!!)
            table.push(BigUint::one()); // 1!!
        }
        while table.len() <= s {
            let k = table.len();
            let prev = table[k - 2].clone();
            table.push(prev * BigUint::from(k));
        }
        table[s].clone()
    })
}

/// Binomial coefficient from a cached Pascal triangle.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    PASCAL.with(|cell| {
        let mut rows = cell.borrow_mut();
        while rows.len() <= n {
            let r = rows.len();
            let mut row = vec![BigUint::one(); r + 1];
            for j in 1..r {
                row[j] = &rows[r - 1][j - 1] + &rows[r - 1][j];
            }
            rows.push(row);
        }
        rows[n][k].clone()
    })
}

/// Matching counts of the complement from matching counts of the graph.
///
/// Intermediate sums are signed; a negative entry means the input could not
/// have been the matching vector of any graph and is reported as such.
pub fn lovasz_transform(v: &MatchingVector) -> Result<MatchingVector> {
    let n = v.n();
    let mut out = Vec::with_capacity(n / 2 + 1);
    for r in 0..=n / 2 {
        let mut total = BigInt::zero();
        for i in 0..=r {
            let weight = binomial(n - 2 * i, 2 * r - 2 * i)
                * double_factorial_cached(2 * (r - i) as i64 - 1)
                * v.get(i);
            if i % 2 == 0 {
                total += BigInt::from(weight);
            } else {
                total -= BigInt::from(weight);
            }
        }
        if total.sign() == Sign::Minus {
            return Err(Error::NotRealizable { index: r });
        }
        out.push(total.magnitude().clone());
    }
    MatchingVector::new(n, out)
}
