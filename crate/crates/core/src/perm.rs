//! Permutations of {1, …, n}, stored one-line: `img[j-1] = sigma(j)`.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    img: Vec<usize>,
}

impl Permutation {
    /// Builds from a one-line image vector on 1..=n; rejects non-bijections.
    pub fn new(img: Vec<usize>) -> Result<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            if v == 0 || v > n {
                return Err(Error::Domain(format!("image value {v} outside 1..={n}")));
            }
            if seen[v - 1] {
                return Err(Error::Domain(format!("image value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { img })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { img: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// sigma(j) for 1-based j.
    pub fn apply(&self, j: usize) -> usize {
        self.img[j - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.img
    }

    pub fn inverse(&self) -> Self {
        let mut img = vec![0; self.img.len()];
        for (j, &v) in self.img.iter().enumerate() {
            img[v - 1] = j + 1;
        }
        Permutation { img }
    }

    /// (self ∘ other)(j) = self(other(j)).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        let img = (1..=self.degree()).map(|j| self.apply(other.apply(j))).collect();
        Permutation { img }
    }

    /// Cycle lengths, weakly decreasing.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j - 1] {
                seen[j - 1] = true;
                len += 1;
                j = self.apply(j);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Cycles as orbits, each rotated to start at its minimum, ordered by it.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut j = start;
            while !seen[j - 1] {
                seen[j - 1] = true;
                cyc.push(j);
                j = self.apply(j);
            }
            out.push(cyc);
        }
        out
    }

    /// The permutation with consecutive cycles (1 2 … l₁)(l₁+1 …)…, one per
    /// given length.  Canonical class representative for character values.
    pub fn with_cycle_type(lengths: &[usize]) -> Result<Self> {
        let n: usize = lengths.iter().sum();
        let mut img = vec![0; n];
        let mut base = 1;
        for &l in lengths {
            if l == 0 {
                return Err(Error::Domain("zero cycle length".into()));
            }
            for off in 0..l {
                img[base + off - 1] = base + (off + 1) % l;
            }
            base += l;
        }
        Permutation::new(img)
    }

    /// All n! permutations, lexicographic by one-line form.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut img: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation { img: img.clone() });
            // next_permutation on img
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| img[i] < img[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| img[j] > img[i]).unwrap();
            img.swap(i, j);
            img[i + 1..].reverse();
        }
        out
    }
}
