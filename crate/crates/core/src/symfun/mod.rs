//! Partitions, permutation actions on finite sets, and monomial-symmetric
//! expansions of their characters.
//!
//! The central computation: for a finite S_n-set, the Frobenius character
//! expanded in monomial symmetric functions has the orbit count of the Young
//! subgroup S_mu as the coefficient of m_mu.  Projecting to k variables makes
//! the result directly comparable with graded dimension counts.

mod chartable;
mod expansion;
mod partition;
mod setrep;

pub use chartable::CharacterTable;
pub use expansion::{project_to_variables, MonomialExpansion};
pub use partition::{partitions_of, Partition};
pub use setrep::{
    frobenius_monomial_expansion, parking_representation, permutation_character,
    young_subgroup_orbits, SetRepresentation,
};
