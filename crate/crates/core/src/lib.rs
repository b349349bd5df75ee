//! Exact computations in coloured mode algebras and their Fock-space models.
//!
//! The library has four layers, each usable on its own:
//!
//! * [`combinatorics`]: parking functions, labelled lattice paths, Fuss-Catalan
//!   numbers, and the admissible mode sequences that index monomial bases.
//! * [`symfun`]: integer partitions, orbit counting under Young subgroups, and
//!   monomial-symmetric-function expansions of permutation characters.
//! * [`modealg`]: words in the generators `e_p[i]`, the defining relations, and
//!   a terminating rewrite that puts any element into admissible normal form.
//! * [`fock`]: a lattice Heisenberg algebra acting on Fock spaces together with
//!   vertex operator components.  This is an independent model of the same
//!   algebra, so rewriting and Fock evaluation cross-check each other; the
//!   [`verify`] module packages those cross-checks as reusable suites.
//!
//! All coefficient arithmetic is exact (arbitrary-precision rationals); every
//! enumeration has a deterministic order and an item cap, and the rewrite
//! engine is fuel-limited so runaway inputs fail loudly instead of spinning.

pub mod combinatorics;
pub mod error;
pub mod fock;
pub mod modealg;
pub mod perm;
pub mod symfun;
pub mod verify;

pub use error::{Error, Result};

/// Exact scalar type used for all algebra and Fock-space coefficients.
pub type Rat = num::BigRational;

/// Caps that keep enumerations and rewrites from running away.
///
/// The defaults are generous for desk-scale work: 10^7 enumerated items and
/// 10^6 rewrite steps per input word.  Hitting a cap is reported as an error,
/// never as a silently truncated answer.
#[derive(Debug, Clone)]
pub struct Limits {
    pub max_items: u64,
    pub max_rewrite_steps: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_items: 10_000_000, max_rewrite_steps: 1_000_000 }
    }
}

pub(crate) mod ratio {
    use crate::Rat;
    use num::traits::{One, Signed};

    /// Renders a rational as `num/den` with a reduced, positive denominator.
    /// This is the wire format; `Display` on `Rat` would drop the `/1`.
    pub fn to_wire(r: &Rat) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    /// `+c` / `-c` prefix form used by the plain-text term printer, with the
    /// denominator shown only when it is not 1.
    pub fn signed_display(r: &Rat) -> String {
        let sign = if r.is_negative() { '-' } else { '+' };
        let abs = r.abs();
        if abs.denom().is_one() {
            format!("{sign}{}", abs.numer())
        } else {
            format!("{sign}{}/{}", abs.numer(), abs.denom())
        }
    }
}
