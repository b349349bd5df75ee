//! Admissible mode sequences: the index data of normal-form monomials.
//!
//! A sequence ((p_1, i_1), …, (p_n, i_n)) of (colour, mode) pairs is
//! admissible for (k, m) when
//!
//! * i_1 = 0 and every i_s >= 0,
//! * i_{s+1} <= i_s + m,
//! * at a maximal ascent i_{s+1} = i_s + m the colours satisfy p_s <= p_{s+1}.
//!
//! For k = 1 these are counted by Fuss-Catalan numbers; restricted to words
//! using each of n colours exactly once they are counted by (mn+1)^(n-1).

use super::counts::fuss_catalan;
use crate::{Error, Limits, Result};
use num::ToPrimitive;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSequence {
    pairs: Vec<(usize, i64)>,
}

impl AdmissibleSequence {
    pub fn new(pairs: Vec<(usize, i64)>, k: usize, m: i64) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::Domain("empty sequence".into()));
        }
        if k == 0 || m < 1 {
            return Err(Error::Domain("need k >= 1 and m >= 1".into()));
        }
        if let Some(&(p, _)) = pairs.iter().find(|&&(p, _)| p == 0 || p > k) {
            return Err(Error::Domain(format!("colour {p} outside 1..={k}")));
        }
        if pairs[0].1 != 0 {
            return Err(Error::Invariant(format!("first mode is {}, not 0", pairs[0].1)));
        }
        for w in pairs.windows(2) {
            let ((p, i), (q, j)) = (w[0], w[1]);
            if j < 0 {
                return Err(Error::Invariant(format!("negative mode {j}")));
            }
            if j > i + m {
                return Err(Error::Invariant(format!("ascent {i} -> {j} exceeds m = {m}")));
            }
            if j == i + m && p > q {
                return Err(Error::Invariant(format!(
                    "maximal ascent {i} -> {j} with colours {p} > {q}"
                )));
            }
        }
        Ok(AdmissibleSequence { pairs })
    }

    pub fn pairs(&self) -> &[(usize, i64)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Total mode degree, the first grading of the monomial this indexes.
    pub fn mode_sum(&self) -> i64 {
        self.pairs.iter().map(|&(_, i)| i).sum()
    }

    /// How many times each colour 1..=k occurs, the second grading.
    pub fn colour_counts(&self, k: usize) -> Vec<usize> {
        let mut counts = vec![0usize; k];
        for &(p, _) in &self.pairs {
            counts[p - 1] += 1;
        }
        counts
    }

    /// True when each colour used appears exactly once and the colours are
    /// exactly 1..=n.
    pub fn is_multilinear(&self) -> bool {
        let n = self.pairs.len();
        let counts = self.colour_counts(n.max(self.pairs.iter().map(|&(p, _)| p).max().unwrap_or(0)));
        counts.len() == n && counts.iter().all(|&c| c == 1)
    }
}

fn mode_vectors(n: usize, m: i64) -> Vec<Vec<i64>> {
    // DFS in ascending choice order = lexicographic output order.
    let mut out = Vec::new();
    let mut cur: Vec<i64> = vec![0];
    fn rec(cur: &mut Vec<i64>, n: usize, m: i64, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let top = cur.last().unwrap() + m;
        for next in 0..=top {
            cur.push(next);
            rec(cur, n, m, out);
            cur.pop();
        }
    }
    rec(&mut cur, n, m, &mut out);
    out
}

fn colourings(
    modes: &[i64],
    k: usize,
    m: i64,
    multilinear: bool,
    emit: &mut dyn FnMut(Vec<(usize, i64)>) -> Result<()>,
) -> Result<()> {
    let n = modes.len();
    let mut colours: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; k + 1];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        s: usize,
        modes: &[i64],
        k: usize,
        m: i64,
        multilinear: bool,
        colours: &mut Vec<usize>,
        used: &mut Vec<bool>,
        emit: &mut dyn FnMut(Vec<(usize, i64)>) -> Result<()>,
    ) -> Result<()> {
        if s == modes.len() {
            let pairs = colours.iter().copied().zip(modes.iter().copied()).collect();
            return emit(pairs);
        }
        // At a maximal ascent the colour may not drop.
        let lo = if s > 0 && modes[s] == modes[s - 1] + m { colours[s - 1] } else { 1 };
        for p in lo..=k {
            if multilinear && used[p] {
                continue;
            }
            used[p] = true;
            colours.push(p);
            rec(s + 1, modes, k, m, multilinear, colours, used, emit)?;
            colours.pop();
            used[p] = false;
        }
        Ok(())
    }
    rec(0, modes, k, m, multilinear, &mut colours, &mut used, emit)
}

fn enumerate(
    n: usize,
    k: usize,
    m: i64,
    multilinear: bool,
    limits: &Limits,
) -> Result<Vec<AdmissibleSequence>> {
    if n == 0 || k == 0 || m < 1 {
        return Err(Error::Domain("need n >= 1, k >= 1, m >= 1".into()));
    }
    // The mode-vector count alone is the Fuss-Catalan number; bail before
    // generating anything if even that exceeds the cap.
    let base = fuss_catalan(n as u64, m as u64)?;
    if base.to_u64().is_none_or(|c| c > limits.max_items) {
        return Err(Error::Resource {
            what: format!("admissible sequences of length {n}"),
            needed: format!(">= {base}"),
            cap: limits.max_items,
        });
    }
    let mut out = Vec::new();
    for modes in mode_vectors(n, m) {
        colourings(&modes, k, m, multilinear, &mut |pairs| {
            if out.len() as u64 >= limits.max_items {
                return Err(Error::Resource {
                    what: format!("admissible sequences of length {n}"),
                    needed: format!("> {}", limits.max_items),
                    cap: limits.max_items,
                });
            }
            out.push(AdmissibleSequence { pairs });
            Ok(())
        })?;
    }
    Ok(out)
}

/// All admissible sequences for (n, k, m), ordered by mode vector then by
/// colour vector, both lexicographically.
pub fn enumerate_admissible_sequences(
    n: usize,
    k: usize,
    m: i64,
    limits: &Limits,
) -> Result<Vec<AdmissibleSequence>> {
    enumerate(n, k, m, false, limits)
}

/// The multilinear subfamily: k = n and each colour appears exactly once.
pub fn enumerate_multilinear_sequences(
    n: usize,
    m: i64,
    limits: &Limits,
) -> Result<Vec<AdmissibleSequence>> {
    enumerate(n, n, m, true, limits)
}
