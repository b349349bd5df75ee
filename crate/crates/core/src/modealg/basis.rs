//! Admissible monomial bases, their colour-graded characters, and the
//! symmetric-group action that permutes colours.

use super::element::{AlgebraElement, AlgebraParams, Generator, Word};
use super::rewrite::rewrite_to_admissible;
use crate::combinatorics::{
    enumerate_admissible_sequences, enumerate_multilinear_sequences, AdmissibleSequence,
};
use crate::perm::Permutation;
use crate::symfun::{partitions_of, Partition};
use crate::{Error, Limits, Rat, Result};
use num::traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

fn word_from_sequence(seq: &AdmissibleSequence) -> Word {
    seq.pairs().iter().map(|&(p, i)| Generator::new(p, i)).collect()
}

/// The admissible words of length n, in the enumeration order of
/// [`enumerate_admissible_sequences`].
pub fn admissible_basis(n: usize, params: &AlgebraParams, limits: &Limits) -> Result<Vec<Word>> {
    let seqs = enumerate_admissible_sequences(n, params.k(), params.m(), limits)?;
    Ok(seqs.iter().map(word_from_sequence).collect())
}

/// Dimensions of the colour-multidegree components of the span of length-n
/// words: the coefficient at key (i_1, …, i_k) is the number of basis words
/// using colour p exactly i_p times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    k: usize,
    coeffs: BTreeMap<Vec<usize>, u64>,
}

impl GradedCharacter {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.coeffs
    }

    /// Sum of all coefficients, i.e. the full basis size.
    pub fn dimension(&self) -> u64 {
        self.coeffs.values().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "coeffs": self
                .coeffs
                .iter()
                .map(|(deg, dim)| json!({"degree": deg, "dim": dim}))
                .collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GradedCharacter {
    /// Polynomial form, e.g. `2 x1^2 + 3 x1 x2 + 2 x2^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, (degree, dim)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut wrote = false;
            if *dim != 1 {
                write!(f, "{dim}")?;
                wrote = true;
            }
            for (var, &exp) in degree.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "x{}", var + 1)?;
                if exp > 1 {
                    write!(f, "^{exp}")?;
                }
                wrote = true;
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        Ok(())
    }
}

/// Buckets the admissible basis of length-n words by colour counts.
pub fn graded_character(
    n: usize,
    params: &AlgebraParams,
    limits: &Limits,
) -> Result<GradedCharacter> {
    let seqs = enumerate_admissible_sequences(n, params.k(), params.m(), limits)?;
    let mut coeffs: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for seq in &seqs {
        *coeffs.entry(seq.colour_counts(params.k())).or_insert(0) += 1;
    }
    Ok(GradedCharacter { k: params.k(), coeffs })
}

/// Relabels every generator colour through sigma (a permutation of 1..=k) and
/// expands the result over the admissible basis again.
pub fn colour_permutation(
    sigma: &Permutation,
    elem: &AlgebraElement,
    params: &AlgebraParams,
    limits: &Limits,
) -> Result<AlgebraElement> {
    if sigma.degree() != params.k() {
        return Err(Error::Domain(format!(
            "permutation degree {} does not match k = {}",
            sigma.degree(),
            params.k()
        )));
    }
    let mut relabelled = AlgebraElement::zero();
    for (word, coeff) in elem.terms() {
        params.check_word(word)?;
        let image: Word = word
            .factors()
            .iter()
            .map(|g| Generator::new(sigma.apply(g.colour), g.mode))
            .collect();
        relabelled.add_term(image, coeff.clone());
    }
    rewrite_to_admissible(&relabelled, params, limits)
}

/// Trace of the colour action on the multilinear basis (k = n, every colour
/// exactly once), per cycle type.
pub fn multilinear_character(
    n: usize,
    m: i64,
    limits: &Limits,
) -> Result<BTreeMap<Partition, i64>> {
    let params = AlgebraParams::new(n, m)?;
    let basis: Vec<Word> = enumerate_multilinear_sequences(n, m, limits)?
        .iter()
        .map(word_from_sequence)
        .collect();
    let mut out = BTreeMap::new();
    for mu in partitions_of(n) {
        let sigma = Permutation::with_cycle_type(mu.parts())?;
        let mut trace = Rat::zero();
        for word in &basis {
            let image =
                colour_permutation(&sigma, &AlgebraElement::from_word(word.clone()), &params, limits)?;
            trace += image.coefficient(word);
        }
        if !trace.is_integer() {
            return Err(Error::Invariant(format!("non-integer trace {trace} at {mu}")));
        }
        let trace = i64::try_from(&trace.to_integer())
            .map_err(|_| Error::Invariant("trace out of i64 range".into()))?;
        out.insert(mu, trace);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::fixed_parking_functions;

    fn params(k: usize, m: i64) -> AlgebraParams {
        AlgebraParams::new(k, m).unwrap()
    }

    #[test]
    fn single_letter_basis() {
        let words = admissible_basis(1, &params(3, 1), &Limits::default()).unwrap();
        let texts: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(texts, vec!["e1[0]", "e2[0]", "e3[0]"]);
    }

    #[test]
    fn basis_order_follows_enumeration() {
        let words = admissible_basis(2, &params(2, 1), &Limits::default()).unwrap();
        assert_eq!(words.len(), 7);
        assert_eq!(words[0].to_string(), "e1[0] e1[0]");
        assert_eq!(words[6].to_string(), "e2[0] e2[1]");
    }

    #[test]
    fn graded_character_examples() {
        let lim = Limits::default();
        let ch = graded_character(2, &params(2, 1), &lim).unwrap();
        let want: BTreeMap<Vec<usize>, u64> =
            [(vec![0, 2], 2), (vec![1, 1], 3), (vec![2, 0], 2)].into_iter().collect();
        assert_eq!(ch.coefficients(), &want);
        assert_eq!(ch.dimension(), 7);
        assert_eq!(ch.to_string(), "2 x2^2 + 3 x1 x2 + 2 x1^2");

        let ch1 = graded_character(2, &params(1, 1), &lim).unwrap();
        let want1: BTreeMap<Vec<usize>, u64> = [(vec![2], 2)].into_iter().collect();
        assert_eq!(ch1.coefficients(), &want1);

        let chk = graded_character(1, &params(3, 1), &lim).unwrap();
        assert_eq!(chk.dimension(), 3);
        assert!(chk.coefficients().values().all(|&d| d == 1));
        assert_eq!(chk.coefficients().len(), 3);
    }

    #[test]
    fn graded_character_json() {
        let ch = graded_character(2, &params(1, 1), &Limits::default()).unwrap();
        assert_eq!(ch.to_json(), serde_json::json!({"k": 1, "coeffs": [{"degree": [2], "dim": 2}]}));
    }

    #[test]
    fn colour_swap_examples() {
        let lim = Limits::default();
        let p = params(2, 1);
        let swap = Permutation::new(vec![2, 1]).unwrap();

        // This basis vector is fixed: the swapped word rewrites back.
        let fixed = AlgebraElement::from_word(Word::parse("e1[0] e2[1]").unwrap());
        assert_eq!(colour_permutation(&swap, &fixed, &p, &lim).unwrap(), fixed);

        // No rewrite needed here, the relabelled word is already admissible.
        let moved = AlgebraElement::from_word(Word::parse("e1[0] e2[0]").unwrap());
        let want = AlgebraElement::from_word(Word::parse("e2[0] e1[0]").unwrap());
        assert_eq!(colour_permutation(&swap, &moved, &p, &lim).unwrap(), want);

        let id = Permutation::identity(2);
        assert_eq!(colour_permutation(&id, &moved, &p, &lim).unwrap(), moved);

        let wrong_degree = Permutation::identity(3);
        assert!(colour_permutation(&wrong_degree, &moved, &p, &lim).is_err());
    }

    #[test]
    fn colour_action_composes_on_multilinear_basis() {
        let lim = Limits::default();
        let n = 3;
        let p = params(n, 1);
        let basis: Vec<Word> = enumerate_multilinear_sequences(n, 1, &lim)
            .unwrap()
            .iter()
            .map(word_from_sequence)
            .collect();
        for sigma in Permutation::all(n) {
            for tau in Permutation::all(n) {
                let composed = sigma.compose(&tau);
                for word in &basis {
                    let x = AlgebraElement::from_word(word.clone());
                    let via_tau = colour_permutation(&tau, &x, &p, &lim).unwrap();
                    let stepwise = colour_permutation(&sigma, &via_tau, &p, &lim).unwrap();
                    let direct = colour_permutation(&composed, &x, &p, &lim).unwrap();
                    assert_eq!(stepwise, direct, "sigma={sigma:?} tau={tau:?} word={word}");
                }
            }
        }
    }

    #[test]
    fn multilinear_character_small() {
        let lim = Limits::default();
        let ch2 = multilinear_character(2, 1, &lim).unwrap();
        let by_parts: BTreeMap<Vec<usize>, i64> =
            ch2.iter().map(|(mu, v)| (mu.parts().to_vec(), *v)).collect();
        assert_eq!(by_parts, [(vec![1, 1], 3), (vec![2], 1)].into_iter().collect());

        let ch3 = multilinear_character(3, 1, &lim).unwrap();
        let by_parts: BTreeMap<Vec<usize>, i64> =
            ch3.iter().map(|(mu, v)| (mu.parts().to_vec(), *v)).collect();
        assert_eq!(
            by_parts,
            [(vec![1, 1, 1], 16), (vec![2, 1], 4), (vec![3], 1)].into_iter().collect()
        );
    }

    #[test]
    fn multilinear_character_counts_fixed_parking_functions() {
        let lim = Limits::default();
        for (n, m) in [(1usize, 1i64), (2, 1), (3, 1), (4, 1), (2, 2), (3, 2)] {
            let ch = multilinear_character(n, m, &lim).unwrap();
            for (mu, got) in &ch {
                let sigma = Permutation::with_cycle_type(mu.parts()).unwrap();
                let want = fixed_parking_functions(&sigma, m as usize, &lim).unwrap();
                assert_eq!(*got, want as i64, "n={n} m={m} mu={mu}");
            }
        }
    }
}
