//! Monomial symmetric function expansions and their projections to finitely
//! many variables.

use super::partition::{partitions_of, Partition};
use crate::{Error, Result};
use serde_json::json;
use std::collections::BTreeMap;

/// A symmetric function of degree n written in the monomial basis:
/// sum of c_mu * m_mu over partitions mu of n.  Zero coefficients are not
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialExpansion {
    n: usize,
    coeffs: BTreeMap<Partition, i64>,
}

impl MonomialExpansion {
    pub fn new(n: usize, coeffs: BTreeMap<Partition, i64>) -> Result<Self> {
        for (mu, &c) in &coeffs {
            if mu.weight() != n {
                return Err(Error::Domain(format!(
                    "partition {mu} has weight {}, expected {n}",
                    mu.weight()
                )));
            }
            if c == 0 {
                return Err(Error::Invariant("zero coefficient stored".into()));
            }
        }
        Ok(MonomialExpansion { n, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &BTreeMap<Partition, i64> {
        &self.coeffs
    }

    pub fn coefficient(&self, mu: &Partition) -> i64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    /// Listed with (n) first, matching the customary partition order.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<_> = partitions_of(self.n)
            .into_iter()
            .filter_map(|mu| {
                let c = self.coefficient(&mu);
                (c != 0).then(|| json!({"mu": mu.parts(), "c": c}))
            })
            .collect();
        json!({"n": self.n, "coeffs": coeffs})
    }
}

/// Expands each m_mu into the k variables x_1..x_k: the coefficient of the
/// exponent vector alpha is c_mu for every distinct rearrangement alpha of mu
/// (padded with zeros).  Partitions with more than k parts project to zero.
pub fn project_to_variables(
    expansion: &MonomialExpansion,
    k: usize,
) -> Result<BTreeMap<Vec<usize>, i64>> {
    if k == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    let mut out = BTreeMap::new();
    for (mu, &c) in expansion.coefficients() {
        if mu.len() > k {
            continue;
        }
        let mut exps = vec![0usize; k];
        exps[..mu.len()].copy_from_slice(mu.parts());
        exps.sort_unstable();
        // Walk all distinct rearrangements via next-permutation.
        loop {
            out.insert(exps.clone(), c);
            let Some(i) = (0..k - 1).rev().find(|&i| exps[i] < exps[i + 1]) else {
                break;
            };
            let j = (i + 1..k).rev().find(|&j| exps[j] > exps[i]).unwrap();
            exps.swap(i, j);
            exps[i + 1..].reverse();
        }
    }
    Ok(out)
}
