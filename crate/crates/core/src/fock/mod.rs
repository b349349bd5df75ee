//! Lattice Heisenberg Fock spaces and vertex-operator components: the
//! independent model that cross-checks the rewrite engine.
//!
//! The lattice has rank k with the constant degenerate form (f_p, f_q) = -m.
//! States are spanned by charged vacua v_h decorated with creation parts
//! f_q[-j], j >= 1; the generators e_p[i] act through the vertex components
//! [`vertex_component`], and everything stays exact.

mod character;
mod heisenberg;
mod rank;
mod space;
mod vertex;

pub use character::{charge_monomials, fock_character};
pub use heisenberg::heisenberg_apply;
pub use rank::{independence_certificate, rank_of_span, CertificateStatus, IndependenceCertificate};
pub use space::{Charge, FockElement, FockMonomial, LatticeConfig};
pub use vertex::{
    check_quadratic_relation, evaluate_element, evaluate_word, vertex_component,
};
pub(crate) use vertex::{nu_coefficients, VertexSource};
