//! Property-based tests for the lattice Fock module.
//!
//! Random homogeneous states probe the operator identities behind the
//! verification suites: the Heisenberg bracket, the commutator of a
//! Heisenberg mode with an operator component, degree/charge bookkeeping,
//! and the quadratic exchange relation.

use parkmode::fock::{
    check_quadratic_relation, evaluate_word, heisenberg_apply, vertex_component, Charge,
    FockElement, FockMonomial, LatticeConfig,
};
use parkmode::modealg::{Generator, Word};
use parkmode::Rat;
use proptest::prelude::*;

/// A lattice configuration together with one monomial state: a charge with
/// coordinates in -2..=2 and at most three creation parts of mode <= 3.
fn state() -> impl Strategy<Value = (LatticeConfig, FockElement)> {
    (1usize..=2, 1i64..=2).prop_flat_map(|(k, m)| {
        let charges = proptest::collection::vec(-2i64..=2, k);
        let parts = proptest::collection::vec((1..=k, 1i64..=3), 0..=3);
        (charges, parts).prop_map(move |(coords, parts)| {
            let cfg = LatticeConfig::new(k, m).unwrap();
            let mono = FockMonomial::new(Charge::new(coords), parts).unwrap();
            (cfg, FockElement::from_monomial(mono))
        })
    })
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// (x f_p[i]) f_q[j] - (x f_q[j]) f_p[i] = (f_p, f_q) j [i + j = 0] x.
    #[test]
    fn heisenberg_bracket_is_diagonal(
        (cfg, x) in state(),
        (p, q) in (1usize..=2, 1usize..=2),
        (i, j) in (-3i64..=3, -3i64..=3),
    ) {
        let k = cfg.k();
        let (p, q) = ((p - 1) % k + 1, (q - 1) % k + 1);
        let mut lhs = heisenberg_apply(q, j, &heisenberg_apply(p, i, &x, &cfg).unwrap(), &cfg).unwrap();
        lhs -= &heisenberg_apply(p, i, &heisenberg_apply(q, j, &x, &cfg).unwrap(), &cfg).unwrap();
        let rhs = if i + j == 0 { x.scaled(&rat(cfg.gram() * j)) } else { FockElement::zero() };
        prop_assert_eq!(lhs, rhs);
    }

    /// Moving a Heisenberg mode past an operator component shifts the
    /// component and picks up -(f_q, f_p) = m:
    /// (x f_q[j]) U_p[i] - (x U_p[i]) f_q[j] = m * x U_p[i+j].
    #[test]
    fn heisenberg_commutes_with_components(
        (cfg, x) in state(),
        (p, q) in (1usize..=2, 1usize..=2),
        (i, j) in (-2i64..=2, -3i64..=3),
    ) {
        let k = cfg.k();
        let (p, q) = ((p - 1) % k + 1, (q - 1) % k + 1);
        let mut lhs = vertex_component(p, i, &heisenberg_apply(q, j, &x, &cfg).unwrap(), &cfg).unwrap();
        lhs -= &heisenberg_apply(q, j, &vertex_component(p, i, &x, &cfg).unwrap(), &cfg).unwrap();
        let rhs = vertex_component(p, i + j, &x, &cfg).unwrap().scaled(&rat(cfg.m()));
        prop_assert_eq!(lhs, rhs);
    }

    /// x U_p[i] lives in degree deg(x) + i with the charge bumped at p.
    #[test]
    fn component_shifts_degree_and_bumps_charge(
        (cfg, x) in state(),
        p in 1usize..=2,
        i in -3i64..=3,
    ) {
        let p = (p - 1) % cfg.k() + 1;
        let (mono, _) = x.terms().next().unwrap();
        let degree = mono.degree(&cfg);
        let bumped = mono.charge().bumped(p);
        let image = vertex_component(p, i, &x, &cfg).unwrap();
        for (out, _) in image.terms() {
            prop_assert_eq!(out.degree(&cfg), degree + i);
            prop_assert_eq!(out.charge(), &bumped);
        }
    }

    /// A word image is homogeneous: the charge counts the colours used and
    /// the degree is the vacuum degree plus the total mode.
    #[test]
    fn word_images_are_homogeneous(
        (cfg, _) in state(),
        raw in proptest::collection::vec((1usize..=2, -2i64..=2), 1..=3),
        coords in proptest::collection::vec(-1i64..=1, 2),
    ) {
        let k = cfg.k();
        let word = Word::new(
            raw.into_iter().map(|(c, i)| Generator::new((c - 1) % k + 1, i)).collect(),
        );
        let charge = Charge::new(coords[..k].to_vec());
        let mut expected = charge.clone();
        for g in word.factors() {
            expected = expected.bumped(g.colour);
        }
        let degree = cfg.vacuum_degree(&charge) + word.mode_sum();
        let image = evaluate_word(&word, &charge, &cfg).unwrap();
        for (mono, _) in image.terms() {
            prop_assert_eq!(mono.charge(), &expected);
            prop_assert_eq!(mono.degree(&cfg), degree);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The quadratic exchange relation holds on every homogeneous state, not
    /// just the charge-zero ones the verification suite sweeps.
    #[test]
    fn exchange_relation_on_random_states(
        (cfg, x) in state(),
        (p, q) in (1usize..=2, 1usize..=2),
        (i, j) in (-2i64..=2, -2i64..=2),
    ) {
        let k = cfg.k();
        let (p, q) = ((p - 1) % k + 1, (q - 1) % k + 1);
        prop_assert!(check_quadratic_relation(p, q, i, j, &x, &cfg).unwrap());
    }
}
