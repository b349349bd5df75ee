//! Right action of the Heisenberg generators f_p[j] on Fock elements.
//!
//! The bracket is [f_p[i], f_q[j]] = (f_p, f_q) * j * delta_{i+j,0} (central
//! element acting as 1), so a positive mode j contracts against each creation
//! part of the same mode with scalar gram * j, a zero mode multiplies by the
//! charge pairing (h, f_p), and a negative mode adjoins a creation part.

use super::space::{FockElement, LatticeConfig};
use crate::{Rat, Result};
use std::cmp::Ordering;

pub fn heisenberg_apply(
    colour: usize,
    mode: i64,
    x: &FockElement,
    cfg: &LatticeConfig,
) -> Result<FockElement> {
    cfg.check_colour(colour)?;
    let mut out = FockElement::zero();
    match mode.cmp(&0) {
        Ordering::Less => {
            for (mono, coeff) in x.terms() {
                out.add_term(mono.with_part(colour, -mode), coeff.clone());
            }
        }
        Ordering::Equal => {
            for (mono, coeff) in x.terms() {
                let scalar = cfg.charge_pairing(mono.charge());
                out.add_term(mono.clone(), coeff * Rat::from_integer(scalar.into()));
            }
        }
        Ordering::Greater => {
            // The colour of the matched part is irrelevant: the form is
            // constant, so every mode-j part contracts with the same scalar.
            let scalar = Rat::from_integer((cfg.gram() * mode).into());
            for (mono, coeff) in x.terms() {
                for (idx, &(_, j)) in mono.parts().iter().enumerate() {
                    if j == mode {
                        out.add_term(mono.without_part_at(idx), coeff * &scalar);
                    }
                }
            }
        }
    }
    Ok(out)
}
