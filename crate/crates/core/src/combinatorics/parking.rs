//! Parking functions for general slope m and their enumeration.
//!
//! A value sequence (f(1), …, f(n)) of positive integers parks for slope m
//! when for every t in 1..=n at least t of the values are <= m(t-1)+1.  For
//! m = 1 this is the classical condition; the count is (mn+1)^(n-1).

use super::counts::parking_count;
use crate::perm::Permutation;
use crate::{Error, Limits, Result};
use num::ToPrimitive;

/// A validated parking function.  The slope is not stored; it is a property
/// of the check, and the same value sequence may park for several slopes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    values: Vec<usize>,
}

impl ParkingFunction {
    pub fn new(values: Vec<usize>, m: usize) -> Result<Self> {
        if is_parking_function(&values, m)? {
            Ok(ParkingFunction { values })
        } else {
            Err(Error::Invariant(format!(
                "value sequence {values:?} does not park for slope {m}"
            )))
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.values.clone())
    }
}

/// The slope-m parking condition.  Rejects empty input and zero values; any
/// positive values are otherwise acceptable (too-large ones simply fail).
pub fn is_parking_function(values: &[usize], m: usize) -> Result<bool> {
    if values.is_empty() {
        return Err(Error::Domain("empty value sequence".into()));
    }
    if m == 0 {
        return Err(Error::Domain("slope m must be >= 1".into()));
    }
    if values.contains(&0) {
        return Err(Error::Domain("parking values must be positive".into()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    // t-th smallest value must be <= m(t-1)+1.
    Ok(sorted.iter().enumerate().all(|(t, &v)| v <= m * t + 1))
}

/// All parking functions of length n for slope m, ordered lexicographically
/// by value sequence.  Errors if the closed-form count exceeds the item cap.
pub fn enumerate_parking_functions(
    n: usize,
    m: usize,
    limits: &Limits,
) -> Result<Vec<ParkingFunction>> {
    if n == 0 {
        return Err(Error::Domain("length n must be >= 1".into()));
    }
    let expected = parking_count(n as u64, m as u64)?;
    match expected.to_u64() {
        Some(c) if c <= limits.max_items => {}
        _ => {
            return Err(Error::Resource {
                what: format!("parking functions of length {n}, slope {m}"),
                needed: expected.to_string(),
                cap: limits.max_items,
            })
        }
    }
    // Values above m(n-1)+1 cannot appear: the t = n condition forbids them.
    let top = m * (n - 1) + 1;
    let mut out = Vec::new();
    let mut values = vec![1usize; n];
    loop {
        if is_parking_function(&values, m)? {
            out.push(ParkingFunction { values: values.clone() });
        }
        // Odometer step in lexicographic order.
        let mut pos = n;
        while pos > 0 {
            if values[pos - 1] < top {
                values[pos - 1] += 1;
                break;
            }
            values[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    Ok(out)
}

/// Number of slope-m parking functions fixed by precomposition with sigma,
/// i.e. with f(sigma(j)) = f(j) for all j.  Such f are exactly the parking
/// functions constant on the cycles of sigma.
pub fn fixed_parking_functions(sigma: &Permutation, m: usize, limits: &Limits) -> Result<u64> {
    let n = sigma.degree();
    if n == 0 {
        return Err(Error::Domain("permutation of degree 0".into()));
    }
    if m == 0 {
        return Err(Error::Domain("slope m must be >= 1".into()));
    }
    let cycles = sigma.cycles();
    let top = m * (n - 1) + 1;
    let candidates = (top as u64).checked_pow(cycles.len() as u32);
    match candidates {
        Some(c) if c <= limits.max_items => {}
        _ => {
            return Err(Error::Resource {
                what: format!("cycle value assignments for degree {n}, slope {m}"),
                needed: candidates.map_or("overflow".into(), |c| c.to_string()),
                cap: limits.max_items,
            })
        }
    }
    let mut count = 0u64;
    let mut assign = vec![1usize; cycles.len()];
    let mut values = vec![0usize; n];
    loop {
        for (cyc, &v) in cycles.iter().zip(&assign) {
            for &j in cyc {
                values[j - 1] = v;
            }
        }
        if is_parking_function(&values, m)? {
            count += 1;
        }
        let mut pos = assign.len();
        while pos > 0 {
            if assign[pos - 1] < top {
                assign[pos - 1] += 1;
                break;
            }
            assign[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    Ok(count)
}
