//! Exact rank computation over the monomial coordinates of Fock elements,
//! and the certificate that the admissible words of a given length stay
//! linearly independent in the module.

use super::space::{Charge, FockElement, FockMonomial, LatticeConfig};
use super::vertex::evaluate_word;
use crate::modealg::{admissible_basis, AlgebraParams};
use crate::{Limits, Result};
use num::{BigInt, Integer, One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

/// Dimension of the span, computed exactly: rows are cleared to integers by
/// the least common denominator, then reduced by fraction-free elimination.
pub fn rank_of_span(elements: &[FockElement]) -> usize {
    let mut columns: BTreeMap<&FockMonomial, usize> = BTreeMap::new();
    for x in elements {
        for (mono, _) in x.terms() {
            let next = columns.len();
            columns.entry(mono).or_insert(next);
        }
    }
    let width = columns.len();
    if width == 0 {
        return 0;
    }
    let mut matrix: Vec<Vec<BigInt>> = Vec::with_capacity(elements.len());
    for x in elements {
        let lcd = x
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut row = vec![BigInt::zero(); width];
        for (mono, coeff) in x.terms() {
            row[columns[mono]] = coeff.numer() * (&lcd / coeff.denom());
        }
        matrix.push(row);
    }
    bareiss_rank(matrix)
}

/// One-step Bareiss: every division is exact, so the entries stay integral
/// and bounded by minors of the input.
fn bareiss_rank(mut matrix: Vec<Vec<BigInt>>) -> usize {
    let rows = matrix.len();
    let width = matrix.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..width {
        if rank == rows {
            break;
        }
        // Smallest nonzero pivot keeps the minors from ballooning.
        let Some(pivot) = (rank..rows)
            .filter(|&r| !matrix[r][col].is_zero())
            .min_by_key(|&r| matrix[r][col].magnitude().clone())
        else {
            continue;
        };
        matrix.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..width {
                let numer = &matrix[rank][col] * &matrix[r][c] - &matrix[r][col] * &matrix[rank][c];
                matrix[r][c] = numer / &prev;
            }
            matrix[r][col] = BigInt::zero();
        }
        prev = matrix[rank][col].clone();
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateStatus {
    /// The module images of the admissible words have full rank.
    Ok,
    /// Rank deficit: the words are linearly dependent in the module.
    Mismatch,
}

/// Outcome of evaluating every admissible word of a fixed length on the
/// vacuum and measuring the rank of the images.
#[derive(Debug, Clone)]
pub struct IndependenceCertificate {
    n: usize,
    k: usize,
    m: i64,
    basis_size: usize,
    rank: usize,
    elapsed_ms: u128,
    status: CertificateStatus,
}

impl IndependenceCertificate {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis_size(&self) -> usize {
        self.basis_size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn elapsed_ms(&self) -> u128 {
        self.elapsed_ms
    }

    pub fn status(&self) -> CertificateStatus {
        self.status
    }

    pub fn passed(&self) -> bool {
        self.status == CertificateStatus::Ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "basis_size": self.basis_size,
            "rank": self.rank,
            "elapsed_ms": self.elapsed_ms as u64,
            "status": match self.status {
                CertificateStatus::Ok => "ok",
                CertificateStatus::Mismatch => "mismatch",
            },
        })
    }
}

/// Evaluates the length-n admissible words on the uncharged vacuum and
/// certifies that their images are linearly independent.
pub fn independence_certificate(
    n: usize,
    cfg: &LatticeConfig,
    limits: &Limits,
) -> Result<IndependenceCertificate> {
    let params = AlgebraParams::new(cfg.k(), cfg.m())?;
    let basis = admissible_basis(n, &params, limits)?;
    let start = Instant::now();
    let images: Vec<FockElement> = basis
        .par_iter()
        .map(|word| evaluate_word(word, &Charge::zero(cfg.k()), cfg))
        .collect::<Result<_>>()?;
    let rank = rank_of_span(&images);
    let status = if rank == basis.len() {
        CertificateStatus::Ok
    } else {
        CertificateStatus::Mismatch
    };
    Ok(IndependenceCertificate {
        n,
        k: cfg.k(),
        m: cfg.m(),
        basis_size: basis.len(),
        rank,
        elapsed_ms: start.elapsed().as_millis(),
        status,
    })
}
