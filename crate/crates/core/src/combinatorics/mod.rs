//! Parking functions, labelled lattice paths, and admissible mode sequences.
//!
//! Everything here is finite and exact: enumerations run in a fixed
//! deterministic order (lexicographic in the stated keys) and are guarded by
//! [`crate::Limits`], closed-form counts use arbitrary-precision integers.

mod admissible;
mod counts;
mod parking;
mod path;

pub use admissible::{
    enumerate_admissible_sequences, enumerate_multilinear_sequences, AdmissibleSequence,
};
pub use counts::{binomial, catalan, fuss_catalan, parking_count};
pub use parking::{
    enumerate_parking_functions, fixed_parking_functions, is_parking_function, ParkingFunction,
};
pub use path::{path_to_pf, pf_to_labelled_path, LabelledPath};
