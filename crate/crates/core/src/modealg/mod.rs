//! Words in the mode generators e_p[i], the defining relations of the
//! bounded-ascent algebras, and the rewrite system that expands any element
//! over the admissible monomial basis.
//!
//! Everything acts on an implicit vacuum from the left: a [`Word`] stands for
//! v e_{p1}[i1] … e_{pn}[in], composed left to right, and v e_p[i] = 0 for
//! i > 0.  Coefficients are exact rationals (the rewrite itself only ever
//! produces integers, but the Fock model shares the scalar type).

mod basis;
mod element;
mod rewrite;

pub use basis::{
    admissible_basis, colour_permutation, graded_character, multilinear_character,
    GradedCharacter,
};
pub use element::{AlgebraElement, AlgebraParams, Generator, Word};
pub use rewrite::{is_admissible_word, relation_element, rewrite_to_admissible};
