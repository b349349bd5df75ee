//! Verification suites that pair two independent computations of the same
//! data and report mismatches with a reproducible counterexample.
//!
//! Each suite returns a [`SuiteReport`] whose cases carry a stable name, a
//! pass flag, and on failure a JSON counterexample small enough to replay by
//! hand.  None of the suites panic on mismatch: a failed case is data.

use crate::combinatorics::{enumerate_parking_functions, path_to_pf, pf_to_labelled_path};
use crate::fock::{
    charge_monomials, fock_character, independence_certificate, nu_coefficients, Charge,
    FockElement, LatticeConfig, VertexSource,
};
use crate::fock::{evaluate_element, evaluate_word};
use crate::modealg::{
    graded_character, rewrite_to_admissible, AlgebraElement, AlgebraParams, Generator, Word,
};
use crate::symfun::{frobenius_monomial_expansion, parking_representation, project_to_variables};
use crate::{Error, Limits, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::{BTreeMap, HashSet};

/// One named check inside a suite.
#[derive(Debug, Clone)]
pub struct CaseOutcome {
    name: String,
    pass: bool,
    counterexample: Option<Value>,
}

impl CaseOutcome {
    pub(crate) fn new(name: String, counterexample: Option<Value>) -> Self {
        CaseOutcome { pass: counterexample.is_none(), name, counterexample }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn passed(&self) -> bool {
        self.pass
    }

    pub fn counterexample(&self) -> Option<&Value> {
        self.counterexample.as_ref()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "counterexample": self.counterexample.clone().unwrap_or(Value::Null),
        })
    }
}

/// A named batch of cases; passes when every case does.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    suite: String,
    cases: Vec<CaseOutcome>,
}

impl SuiteReport {
    pub(crate) fn new(suite: &str, cases: Vec<CaseOutcome>) -> Self {
        SuiteReport { suite: suite.to_string(), cases }
    }

    pub fn suite(&self) -> &str {
        &self.suite
    }

    pub fn cases(&self) -> &[CaseOutcome] {
        &self.cases
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(CaseOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CaseOutcome> {
        self.cases.iter().find(|c| !c.passed())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "cases": self.cases.iter().map(CaseOutcome::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Checks the exchange identity
/// sum_l nu_l U_p[i+l] U_q[j+m-l] = sum_l nu_l U_q[j+l] U_p[i+m-l]
/// on every charge-zero basis state of degree >= `degree_floor`, for all
/// |i|, |j| <= `mode_bound`.  One case per unordered colour pair; swapping
/// (p, i) with (q, j) swaps the two sides, so ordered pairs add nothing.
#[allow(clippy::needless_range_loop)] // p, q index two grids symmetrically
pub fn relations_suite(
    k: usize,
    m: i64,
    degree_floor: i64,
    mode_bound: i64,
    limits: &Limits,
) -> Result<SuiteReport> {
    if mode_bound < 0 {
        return Err(Error::Domain(format!("negative mode bound {mode_bound}")));
    }
    let cfg = LatticeConfig::new(k, m)?;
    let states = charge_monomials(&cfg, &Charge::zero(k), degree_floor, limits)?;
    let nu = nu_coefficients(m);
    let b = mode_bound;
    let width = (2 * b + m + 1) as usize;
    let idx = |alpha: i64| (alpha + b) as usize;

    let failures: Vec<Vec<(usize, usize, Value)>> = states
        .par_iter()
        .map(|state| -> Result<Vec<(usize, usize, Value)>> {
            let x = FockElement::from_monomial(state.clone());
            // First-stage images x U_p[alpha] over the widened mode range,
            // all read off one annihilation sweep of x.
            let mut first = vec![vec![FockElement::zero(); width]; k];
            if let Some(source) = VertexSource::new(&x, &cfg)? {
                for p in 0..k {
                    for alpha in -b..=b + m {
                        first[p][idx(alpha)] = source.component(p + 1, alpha, &cfg)?;
                    }
                }
            }
            // Second stage: (x U_p[alpha]) U_q[beta], one sweep per image.
            let mut second = vec![vec![vec![vec![FockElement::zero(); width]; width]; k]; k];
            for p in 0..k {
                for alpha in 0..width {
                    let Some(source) = VertexSource::new(&first[p][alpha], &cfg)? else {
                        continue;
                    };
                    for q in 0..k {
                        for beta in -b..=b + m {
                            second[p][q][alpha][idx(beta)] =
                                source.component(q + 1, beta, &cfg)?;
                        }
                    }
                }
            }
            let mut fails = Vec::new();
            for p in 0..k {
                for q in p..k {
                    for i in -b..=b {
                        for j in -b..=b {
                            let mut difference = FockElement::zero();
                            for (l, nu_l) in nu.iter().enumerate() {
                                let l = l as i64;
                                difference += &second[p][q][idx(i + l)][idx(j + m - l)].scaled(nu_l);
                                difference -= &second[q][p][idx(j + l)][idx(i + m - l)].scaled(nu_l);
                            }
                            if !difference.is_zero() {
                                fails.push((
                                    p + 1,
                                    q + 1,
                                    json!({
                                        "p": p + 1,
                                        "q": q + 1,
                                        "i": i,
                                        "j": j,
                                        "state": x.to_json()?,
                                        "difference": difference.to_json()?,
                                    }),
                                ));
                            }
                        }
                    }
                }
            }
            Ok(fails)
        })
        .collect::<Result<_>>()?;

    let flat: Vec<(usize, usize, Value)> = failures.into_iter().flatten().collect();
    let mut cases = Vec::new();
    for p in 1..=k {
        for q in p..=k {
            let hit = flat.iter().find(|&&(fp, fq, _)| fp == p && fq == q);
            cases.push(CaseOutcome::new(
                format!("exchange(k={k},m={m},p={p},q={q})"),
                hit.map(|(_, _, v)| v.clone()),
            ));
        }
    }
    Ok(SuiteReport::new("relations", cases))
}

/// Runs [`independence_certificate`] for each (n, k, m) combination.
pub fn independence_suite(
    combos: &[(usize, usize, i64)],
    limits: &Limits,
) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for &(n, k, m) in combos {
        let cfg = LatticeConfig::new(k, m)?;
        let cert = independence_certificate(n, &cfg, limits)?;
        cases.push(CaseOutcome::new(
            format!("independence(n={n},k={k},m={m})"),
            (!cert.passed()).then(|| cert.to_json()),
        ));
    }
    Ok(SuiteReport::new("independence", cases))
}

/// Compares the colour-graded dimension count of the length-n admissible
/// words (m = 1) against the monomial expansion of the character of the
/// parking-function permutation module, projected to k variables.
pub fn character_match_suite(n_max: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        let rep = parking_representation(n, 1, limits)?;
        let frobenius = frobenius_monomial_expansion(&rep)?;
        for k in 1..=n {
            let params = AlgebraParams::new(k, 1)?;
            let graded = graded_character(n, &params, limits)?;
            let projected: BTreeMap<Vec<usize>, u64> = project_to_variables(&frobenius, k)?
                .into_iter()
                .map(|(exps, c)| (exps, c as u64))
                .collect();
            let pass = graded.coefficients() == &projected;
            cases.push(CaseOutcome::new(
                format!("character(n={n},k={k})"),
                (!pass).then(|| {
                    json!({
                        "graded": graded.to_json(),
                        "projected_frobenius": projected
                            .iter()
                            .map(|(e, c)| json!({"degree": e, "dim": c}))
                            .collect::<Vec<_>>(),
                    })
                }),
            ));
        }
    }
    Ok(SuiteReport::new("character-match", cases))
}

/// Round-trips every slope-1 parking function of length <= n_max through its
/// labelled path, checking injectivity and the staircase conditions of the
/// area word along the way.
pub fn bijection_suite(n_max: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for n in 1..=n_max {
        let functions = enumerate_parking_functions(n, 1, limits)?;
        let mut seen = HashSet::new();
        let mut failure = None;
        for f in &functions {
            let path = pf_to_labelled_path(f)?;
            let back = path_to_pf(&path)?;
            if &back != f {
                failure = Some(json!({
                    "pf": f.to_json(),
                    "path": path.to_json(),
                    "round_trip": back.to_json(),
                    "reason": "round trip changed the function",
                }));
                break;
            }
            if !seen.insert((path.sigma().one_line().to_vec(), path.counts().to_vec())) {
                failure = Some(json!({
                    "pf": f.to_json(),
                    "path": path.to_json(),
                    "reason": "two functions mapped to one path",
                }));
                break;
            }
            let a = path.area_word();
            let labels = path.sigma().one_line();
            let staircase = a[0] == 0
                && (0..n - 1).all(|s| {
                    a[s + 1] <= a[s] + 1 && (a[s + 1] != a[s] + 1 || labels[s] < labels[s + 1])
                });
            if !staircase {
                failure = Some(json!({
                    "pf": f.to_json(),
                    "path": path.to_json(),
                    "labels": labels,
                    "reason": "area word fails the staircase conditions",
                }));
                break;
            }
        }
        cases.push(CaseOutcome::new(
            format!("bijection(n={n},functions={})", functions.len()),
            failure,
        ));
    }
    Ok(SuiteReport::new("bijection", cases))
}

/// (h, f_1)/2 - (h, h)/2 computed from an explicitly written Gram matrix,
/// kept separate from the simplified formula inside `LatticeConfig`.
fn oracle_vacuum_degree(k: usize, m: i64, h: &Charge) -> i64 {
    let gram = vec![vec![-m; k]; k];
    let c = h.coords();
    let mut h_dot_h = 0;
    for p in 0..k {
        for q in 0..k {
            h_dot_h += c[p] * gram[p][q] * c[q];
        }
    }
    let mut h_dot_f1 = 0;
    for p in 0..k {
        h_dot_f1 += c[p] * gram[p][0];
    }
    (h_dot_f1 - h_dot_h) / 2
}

/// Coefficients 0..=n_max of the k-coloured partition generating series
/// prod_{j >= 1} (1 - q^j)^{-k}.
fn coloured_partition_counts(k: usize, n_max: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n_max + 1];
    counts[0] = 1;
    for _ in 0..k {
        for j in 1..=n_max {
            for t in j..=n_max {
                counts[t] += counts[t - j];
            }
        }
    }
    counts
}

/// Compares the enumerated bigraded dimensions of the Fock space against the
/// coloured-partition closed form, one case per lattice rank 1..=k_max.
pub fn fock_character_suite(
    k_max: usize,
    m: i64,
    window: i64,
    degree_floor: i64,
    limits: &Limits,
) -> Result<SuiteReport> {
    let mut cases = Vec::new();
    for k in 1..=k_max {
        let cfg = LatticeConfig::new(k, m)?;
        let table = fock_character(&cfg, window, degree_floor, limits)?;
        let deepest = {
            // The vacuum degree in the charge box peaks at the most negative
            // coordinate sum.
            let s = -(window * k as i64);
            m * (s * s - s) / 2 - degree_floor
        };
        let counts = coloured_partition_counts(k, deepest.max(0) as usize);
        let mut failure = None;
        let mut coords = vec![-window; k];
        'charges: loop {
            let h = Charge::new(coords.clone());
            let shift = oracle_vacuum_degree(k, m, &h);
            for d in degree_floor..=shift {
                let want = counts[(shift - d) as usize];
                let got = table.get(&(d, h.clone())).copied().unwrap_or(0);
                if got != want {
                    failure = Some(json!({
                        "charge": h.coords(),
                        "degree": d,
                        "enumerated": got,
                        "expected": want,
                    }));
                    break 'charges;
                }
            }
            let Some(i) = coords.iter().rposition(|&c| c < window) else {
                break;
            };
            coords[i] += 1;
            for c in &mut coords[i + 1..] {
                *c = -window;
            }
        }
        if failure.is_none() {
            // Nothing outside the expected rectangle may be counted.
            if let Some(((d, h), count)) =
                table.iter().find(|((d, h), _)| *d > oracle_vacuum_degree(k, m, h))
            {
                failure = Some(json!({
                    "charge": h.coords(),
                    "degree": d,
                    "enumerated": count,
                    "expected": 0,
                }));
            }
        }
        cases.push(CaseOutcome::new(
            format!("fock-character(k={k},m={m},window={window},floor={degree_floor})"),
            failure,
        ));
    }
    Ok(SuiteReport::new("fock-character", cases))
}

/// Seeds a stream of random words and checks that the rewrite engine and the
/// module action agree: the image of a word on the uncharged vacuum equals
/// the image of its admissible normal form.
pub fn rewrite_oracle_suite(seed: u64, samples: usize, limits: &Limits) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::with_capacity(samples);
    for t in 0..samples {
        let m = rng.gen_range(1..=2i64);
        let k = rng.gen_range(1..=3usize);
        let len = rng.gen_range(1..=4usize);
        let word: Word = (0..len)
            .map(|_| Generator::new(rng.gen_range(1..=k), rng.gen_range(0..=3i64)))
            .collect();
        let params = AlgebraParams::new(k, m)?;
        let cfg = LatticeConfig::new(k, m)?;
        let normal = rewrite_to_admissible(&AlgebraElement::from_word(word.clone()), &params, limits)?;
        let direct = evaluate_word(&word, &Charge::zero(k), &cfg)?;
        let via_normal = evaluate_element(&normal, &Charge::zero(k), &cfg)?;
        let counterexample = if direct == via_normal {
            None
        } else {
            Some(json!({
                "word": word.to_string(),
                "k": k,
                "m": m,
                "normal_form": normal.to_json(),
                "direct_image": direct.to_json()?,
                "image_of_normal_form": via_normal.to_json()?,
            }))
        };
        cases.push(CaseOutcome::new(
            format!("sample-{t:03}(k={k},m={m},word={word})"),
            counterexample,
        ));
    }
    Ok(SuiteReport::new("rewrite-oracle", cases))
}
