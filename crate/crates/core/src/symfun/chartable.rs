//! Irreducible character tables of symmetric groups, computed by explicit
//! enumeration (no hook or Murnaghan-Nakayama formulas): permutation-module
//! characters are fixed-point counts, and Gram-Schmidt against already-found
//! irreducibles peels off the new one.  Practical for n <= 7.

use super::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::{Error, Result};
use std::collections::HashMap;

pub struct CharacterTable {
    n: usize,
    classes: Vec<Partition>,
    class_sizes: Vec<u64>,
    irreducibles: Vec<(Partition, Vec<i64>)>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 8 {
            return Err(Error::Domain("character table supported for 1 <= n <= 8".into()));
        }
        let classes = partitions_of(n);
        let class_index: HashMap<Vec<usize>, usize> = classes
            .iter()
            .enumerate()
            .map(|(i, mu)| (mu.parts().to_vec(), i))
            .collect();

        let mut class_sizes = vec![0u64; classes.len()];
        for g in Permutation::all(n) {
            class_sizes[class_index[&g.cycle_lengths()]] += 1;
        }

        // Permutation-module characters: xi_mu(g) counts ordered set
        // partitions with block sizes mu fixed by g, i.e. assignments of the
        // cycles of g to blocks filling each block exactly.
        let xi = |mu: &Partition, class: &Partition| -> i64 {
            let mut rem = mu.parts().to_vec();
            fn assign(cycles: &[usize], rem: &mut Vec<usize>) -> i64 {
                let Some((&c, rest)) = cycles.split_first() else {
                    return 1;
                };
                let mut total = 0;
                for b in 0..rem.len() {
                    if rem[b] >= c {
                        rem[b] -= c;
                        total += assign(rest, rem);
                        rem[b] += c;
                    }
                }
                total
            }
            assign(class.parts(), &mut rem)
        };

        let factorial: i128 = (1..=n as i128).product();
        let inner = |a: &[i64], b: &[i64]| -> i64 {
            let sum: i128 = class_sizes
                .iter()
                .zip(a.iter().zip(b))
                .map(|(&s, (&x, &y))| s as i128 * x as i128 * y as i128)
                .sum();
            debug_assert_eq!(sum % factorial, 0, "inner product must be integral");
            (sum / factorial) as i64
        };

        // Descending lexicographic order refines dominance, so when lambda is
        // processed every irreducible occurring in xi_lambda besides chi^lambda
        // is already known.
        let mut irreducibles: Vec<(Partition, Vec<i64>)> = Vec::new();
        for lambda in &classes {
            let mut chi: Vec<i64> = classes.iter().map(|c| xi(lambda, c)).collect();
            for (_, prev) in &irreducibles {
                let mult = inner(&chi, prev);
                for (v, p) in chi.iter_mut().zip(prev) {
                    *v -= mult * p;
                }
            }
            if inner(&chi, &chi) != 1 {
                return Err(Error::Invariant(format!(
                    "reduction of xi_{lambda} did not leave an irreducible"
                )));
            }
            irreducibles.push((lambda.clone(), chi));
        }
        Ok(CharacterTable { n, classes, class_sizes, irreducibles })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Conjugacy classes by cycle type, (n) first.
    pub fn classes(&self) -> &[Partition] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// Irreducible characters, one per partition, values aligned with
    /// `classes()`.
    pub fn irreducibles(&self) -> &[(Partition, Vec<i64>)] {
        &self.irreducibles
    }

    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Result<i64> {
        if a.len() != self.classes.len() || b.len() != self.classes.len() {
            return Err(Error::Domain("class-function vector of wrong length".into()));
        }
        let factorial: i128 = (1..=self.n as i128).product();
        let sum: i128 = self
            .class_sizes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&s, (&x, &y))| s as i128 * x as i128 * y as i128)
            .sum();
        if sum % factorial != 0 {
            return Err(Error::Invariant(
                "inner product of these vectors is not an integer".into(),
            ));
        }
        Ok((sum / factorial) as i64)
    }

    /// Multiplicities of each irreducible in the given class function, with a
    /// reconstruction check: the input must be exactly the resulting integer
    /// combination.
    pub fn decompose(&self, values: &[i64]) -> Result<Vec<i64>> {
        let mults: Vec<i64> = self
            .irreducibles
            .iter()
            .map(|(_, chi)| self.inner_product(values, chi))
            .collect::<Result<_>>()?;
        let mut recon = vec![0i64; self.classes.len()];
        for (m, (_, chi)) in mults.iter().zip(&self.irreducibles) {
            for (r, &v) in recon.iter_mut().zip(chi) {
                *r += m * v;
            }
        }
        if recon != values {
            return Err(Error::Invariant(
                "vector is not an integral combination of irreducibles".into(),
            ));
        }
        Ok(mults)
    }
}
