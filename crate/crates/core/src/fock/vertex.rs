//! Vertex operator components U_p[i] acting on the right of the Fock module.
//!
//! U_p[i] is the z^{-i} component of the operator that (reading right to
//! left on a charge-h vector) applies the annihilation exponential
//! exp(-sum_{j>0} f_p[j] z^{-j} / j), bumps the charge by f_p, and applies
//! the creation exponential exp(sum_{j>0} f_p[-j] z^j / j).  Collecting the
//! z-power i + (h, f_p) contributed by the charge factor gives the finite
//! sum implemented here: over each annihilation weight a the creation side
//! must supply weight a - i - (h, f_p).
//!
//! A word in the letters e_p[i] acts by these components; `evaluate_word`
//! and `evaluate_element` realise that action starting from a charged
//! vacuum, and `check_quadratic_relation` tests the exchange identity
//! sum_l nu_l U_p[i+l] U_q[j+m-l] = sum_l nu_l U_q[j+l] U_p[i+m-l] with
//! nu_l the coefficients of (1 - t)^m.

use super::heisenberg::heisenberg_apply;
use super::space::{Charge, FockElement, LatticeConfig};
use crate::combinatorics::binomial;
use crate::modealg::{AlgebraElement, Word};
use crate::symfun::{partitions_of, Partition};
use crate::{Rat, Result};
use num::BigInt;
use std::cell::RefCell;
use std::rc::Rc;

/// prod over part groups of (sign/j)^{r_j} / r_j!, the exponential
/// coefficient attached to a partition; sign is -1 on the annihilation side.
fn exponential_scalar(lambda: &Partition, negate: bool) -> Rat {
    let mut scalar = Rat::from_integer(1.into());
    let mut prev = 0usize;
    let mut run = 0i64;
    for &j in lambda.parts() {
        if j == prev {
            run += 1;
        } else {
            prev = j;
            run = 1;
        }
        // Multiplying by sign/(j * run) for each copy accumulates
        // sign^r / (j^r * r!) over a group of r equal parts.
        let numer: BigInt = if negate { (-1).into() } else { 1.into() };
        scalar *= Rat::new(numer, BigInt::from(j as i64 * run));
    }
    scalar
}

/// Partitions of one weight paired with their exponential-series scalars.
type ExpansionRow = Vec<(Partition, Rat)>;

/// Partitions of a given weight, each with its creation-side exponential
/// scalar; the annihilation side flips the sign per part.  The rows are small
/// and requested millions of times, hence a per-thread cache.
fn exponential_terms(weight: usize) -> Rc<ExpansionRow> {
    thread_local! {
        static CACHE: RefCell<Vec<Rc<ExpansionRow>>> = const { RefCell::new(Vec::new()) };
    }
    CACHE.with(|cache| {
        let mut cache = cache.borrow_mut();
        while cache.len() <= weight {
            let rows = partitions_of(cache.len())
                .into_iter()
                .map(|p| {
                    let scalar = exponential_scalar(&p, false);
                    (p, scalar)
                })
                .collect();
            cache.push(Rc::new(rows));
        }
        Rc::clone(&cache[weight])
    })
}

/// Weight-a coefficient of exp(-sum_{j>0} f_p[j] z^{-j} / j) applied to x.
/// The contraction scalar is the same for every colour (the pairing matrix
/// is constant), so the result does not depend on which colour acts.
fn annihilation_piece(weight: i64, x: &FockElement, cfg: &LatticeConfig) -> Result<FockElement> {
    let mut out = FockElement::zero();
    for (lambda, scalar) in exponential_terms(weight as usize).iter() {
        let mut piece = x.clone();
        for &j in lambda.parts() {
            piece = heisenberg_apply(1, j as i64, &piece, cfg)?;
            if piece.is_zero() {
                break;
            }
        }
        if !piece.is_zero() {
            let signed =
                if lambda.len() % 2 == 1 { -scalar.clone() } else { scalar.clone() };
            out += &piece.scaled(&signed);
        }
    }
    Ok(out)
}

/// Weight-c coefficient of exp(sum_{j>0} f_p[-j] z^j / j) applied to x:
/// every partition of the weight adjoins its parts on the given colour.
fn creation_piece(colour: usize, weight: i64, x: &FockElement) -> FockElement {
    let mut out = FockElement::zero();
    for (lambda, scalar) in exponential_terms(weight as usize).iter() {
        for (mono, coeff) in x.terms() {
            out.add_term(mono.with_parts(colour, lambda.parts()), coeff * scalar);
        }
    }
    out
}

/// The component-independent half of a vertex application: the weight-a
/// annihilation images of one charge-homogeneous element, plus its pairing
/// shift.  Neither depends on the acting colour or mode, so a whole grid of
/// components can be read off one source for the price of a single
/// annihilation sweep.
pub(crate) struct VertexSource {
    pairing: i64,
    max_degree: i64,
    pieces: Vec<FockElement>,
}

impl VertexSource {
    /// `None` for the zero element; mixed charges are an error because the
    /// pairing shift enters the component count.
    pub(crate) fn new(x: &FockElement, cfg: &LatticeConfig) -> Result<Option<Self>> {
        let charge = match x.homogeneous_charge()? {
            None => return Ok(None),
            Some(h) => h.clone(),
        };
        cfg.check_charge(&charge)?;
        let max_degree = x.max_creation_degree();
        let pieces = (0..=max_degree)
            .map(|a| annihilation_piece(a, x, cfg))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(VertexSource { pairing: cfg.charge_pairing(&charge), max_degree, pieces }))
    }

    /// x . U_p[mode] assembled from the precomputed annihilation pieces.
    pub(crate) fn component(
        &self,
        colour: usize,
        mode: i64,
        cfg: &LatticeConfig,
    ) -> Result<FockElement> {
        cfg.check_colour(colour)?;
        let valuation = mode + self.pairing;
        let mut out = FockElement::zero();
        // Annihilation weight a needs creation weight a - valuation >= 0, and
        // cannot exceed the creation degree already present in the source.
        for a in valuation.max(0)..=self.max_degree {
            let piece = &self.pieces[a as usize];
            if piece.is_zero() {
                continue;
            }
            out += &creation_piece(colour, a - valuation, &piece.charge_bumped(colour));
        }
        Ok(out)
    }
}

/// x . U_p[i] for a charge-homogeneous x.  The zero element maps to zero;
/// mixed charges are an error because (h, f_p) enters the component count.
pub fn vertex_component(
    colour: usize,
    mode: i64,
    x: &FockElement,
    cfg: &LatticeConfig,
) -> Result<FockElement> {
    cfg.check_colour(colour)?;
    match VertexSource::new(x, cfg)? {
        None => Ok(FockElement::zero()),
        Some(source) => source.component(colour, mode, cfg),
    }
}

/// v_h . e_{p1}[i1] … e_{pn}[in], reading the word left to right.
pub fn evaluate_word(word: &Word, charge: &Charge, cfg: &LatticeConfig) -> Result<FockElement> {
    cfg.check_charge(charge)?;
    let mut x = FockElement::vacuum(charge.clone());
    for g in word.factors() {
        x = vertex_component(g.colour, g.mode, &x, cfg)?;
        if x.is_zero() {
            break;
        }
    }
    Ok(x)
}

/// Linear extension of `evaluate_word`.
pub fn evaluate_element(
    elem: &AlgebraElement,
    charge: &Charge,
    cfg: &LatticeConfig,
) -> Result<FockElement> {
    let mut out = FockElement::zero();
    for (word, coeff) in elem.terms() {
        let image = evaluate_word(word, charge, cfg)?;
        out += &image.scaled(coeff);
    }
    Ok(out)
}

/// nu_l = (-1)^l C(m, l), the coefficients of (1 - t)^m.
pub(crate) fn nu_coefficients(m: i64) -> Vec<Rat> {
    (0..=m as u64)
        .map(|l| {
            let mut c = BigInt::from(binomial(m as u64, l));
            if l % 2 == 1 {
                c = -c;
            }
            Rat::from_integer(c)
        })
        .collect()
}

/// Whether sum_l nu_l (x . U_p[i+l]) . U_q[j+m-l] equals
/// sum_l nu_l (x . U_q[j+l]) . U_p[i+m-l] on the given x.
pub fn check_quadratic_relation(
    p: usize,
    q: usize,
    i: i64,
    j: i64,
    x: &FockElement,
    cfg: &LatticeConfig,
) -> Result<bool> {
    cfg.check_colour(p)?;
    cfg.check_colour(q)?;
    let Some(source) = VertexSource::new(x, cfg)? else {
        return Ok(true);
    };
    let m = cfg.m();
    let mut difference = FockElement::zero();
    for (l, nu) in nu_coefficients(m).into_iter().enumerate() {
        let l = l as i64;
        let lhs = vertex_component(q, j + m - l, &source.component(p, i + l, cfg)?, cfg)?;
        difference += &lhs.scaled(&nu);
        let rhs = vertex_component(p, i + m - l, &source.component(q, j + l, cfg)?, cfg)?;
        difference -= &rhs.scaled(&nu);
    }
    Ok(difference.is_zero())
}
