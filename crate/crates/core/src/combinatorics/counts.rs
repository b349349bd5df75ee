//! Closed-form counts: binomials, Fuss-Catalan numbers, parking counts.

use crate::{Error, Result};
use num::bigint::BigUint;
use num::traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    // Numerator factors stay divisible at each step: acc is C(n-k+i, i).
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc
}

/// C((m+1)n, n) / (mn + 1), the count of m-ary lattice paths below the
/// diagonal.  m = 1 is the Catalan case.
pub fn fuss_catalan(n: u64, m: u64) -> Result<BigUint> {
    if m == 0 {
        return Err(Error::Domain("fuss_catalan needs m >= 1".into()));
    }
    let num = binomial((m + 1) * n, n);
    let den = BigUint::from(m * n + 1);
    let (q, r) = num::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    Ok(q)
}

pub fn catalan(n: u64) -> BigUint {
    fuss_catalan(n, 1).expect("m = 1 is always valid")
}

/// (mn + 1)^(n-1), the number of length-n parking functions for slope m.
pub fn parking_count(n: u64, m: u64) -> Result<BigUint> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("parking_count needs n >= 1 and m >= 1".into()));
    }
    Ok(BigUint::from(m * n + 1).pow(n as u32 - 1))
}
