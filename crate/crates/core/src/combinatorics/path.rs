//! The bijection between classical (slope 1) parking functions and labelled
//! lattice paths.
//!
//! A parking function f of length n is encoded as a pair (sigma, b):
//!
//! * sigma lists the arguments 1..=n sorted by value, ties broken by
//!   increasing argument, so sigma(s) is the argument of the s-th smallest
//!   value;
//! * b_t counts the arguments with value at most t, for t in 1..=n.
//!
//! The area word a_s = s - v_s, where v_s is the value at sorted position s,
//! measures how far each north step of the lattice path sits above the
//! diagonal.  Together with sigma it is a staircase word: a_1 = 0, ascents
//! are at most one unit, and a unit ascent forces sigma(s) < sigma(s+1)
//! (positions s, s+1 then share a value, and ties sort by argument).  This is
//! the shape of admissible mode sequences, with sigma playing the colours.

use super::parking::{is_parking_function, ParkingFunction};
use crate::perm::Permutation;
use crate::{Error, Result};
use serde_json::json;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledPath {
    n: usize,
    sigma: Permutation,
    b: Vec<usize>,
    a: Vec<usize>,
}

impl LabelledPath {
    /// Validates the pair (sigma, b) and derives the area word.  Each failed
    /// condition is named in the error.
    pub fn new(sigma: Permutation, b: Vec<usize>) -> Result<Self> {
        let n = sigma.degree();
        if n == 0 {
            return Err(Error::Domain("empty path".into()));
        }
        if b.len() != n {
            return Err(Error::Invariant(format!(
                "count sequence has length {}, permutation degree {n}",
                b.len()
            )));
        }
        if b[n - 1] != n {
            return Err(Error::Invariant(format!("condition (i): b_n = {} != n", b[n - 1])));
        }
        if b.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invariant(
                "condition (i): count sequence not weakly increasing".into(),
            ));
        }
        for (t, &bt) in b.iter().enumerate() {
            if bt < t + 1 {
                return Err(Error::Invariant(format!(
                    "condition (ii): b_{} = {bt} < {}",
                    t + 1,
                    t + 1
                )));
            }
        }
        // Condition (iii): positions s, s+1 carry equal values exactly when
        // no count step lands on s; within such a tie the arguments must
        // increase.
        let steps: std::collections::BTreeSet<usize> = b.iter().copied().collect();
        for s in 1..n {
            if !steps.contains(&s) && sigma.apply(s) > sigma.apply(s + 1) {
                return Err(Error::Invariant(format!(
                    "condition (iii): tie at positions {s},{} but sigma({s}) = {} > {}",
                    s + 1,
                    sigma.apply(s),
                    sigma.apply(s + 1)
                )));
            }
        }
        // Positions b_{t-1}+1 ..= b_t of the sorted order carry value t, so
        // the area word there is s - t.  Condition (ii) keeps s - t >= 0.
        let mut a = vec![0usize; n];
        let mut prev = 0;
        for (t, &bt) in b.iter().enumerate() {
            for s in prev + 1..=bt {
                a[s - 1] = s - (t + 1);
            }
            prev = bt;
        }
        Ok(LabelledPath { n, sigma, b, a })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn counts(&self) -> &[usize] {
        &self.b
    }

    /// Staircase presentation of the path: a_1 = 0, a_{s+1} <= a_s + 1, and
    /// sigma(s) < sigma(s+1) whenever a_{s+1} = a_s + 1.
    pub fn area_word(&self) -> &[usize] {
        &self.a
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "sigma": self.sigma.one_line(),
            "b": self.b,
            "a": self.a,
        })
    }
}

/// Encodes a slope-1 parking function as a labelled path.
pub fn pf_to_labelled_path(f: &ParkingFunction) -> Result<LabelledPath> {
    let values = f.values();
    if !is_parking_function(values, 1)? {
        return Err(Error::Domain(
            "path encoding is defined for slope-1 parking functions".into(),
        ));
    }
    let n = values.len();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&j| (values[j - 1], j));
    let sigma = Permutation::new(order).expect("sorted arguments form a permutation");
    let b = (1..=n)
        .map(|t| values.iter().filter(|&&v| v <= t).count())
        .collect();
    LabelledPath::new(sigma, b)
}

/// Decodes a labelled path back to its parking function: the positions
/// b_{t-1}+1 ..= b_t of sigma receive value t.
pub fn path_to_pf(path: &LabelledPath) -> Result<ParkingFunction> {
    let n = path.len();
    let mut values = vec![0usize; n];
    let mut prev = 0;
    for t in 1..=n {
        let bt = path.counts()[t - 1];
        for s in prev + 1..=bt {
            values[path.sigma().apply(s) - 1] = t;
        }
        prev = bt;
    }
    ParkingFunction::new(values, 1)
}
