//! Property-based tests for the normal-form rewrite engine.
//!
//! Random words over random (k, m) exercise the invariants the rewrite must
//! keep: admissible output, idempotence, grading preservation, annihilation
//! of the defining relations, and agreement with the Fock-space action.

use parkmode::fock::{evaluate_element, evaluate_word, Charge, LatticeConfig};
use parkmode::modealg::{
    is_admissible_word, relation_element, rewrite_to_admissible, AlgebraElement, AlgebraParams,
    Generator, Word,
};
use parkmode::Limits;
use proptest::prelude::*;

/// Random word with the given factor budget, colours in 1..=k, and a mode
/// window that includes annihilating (positive leading) and creating modes.
fn word_in(k: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((1..=k, -2i64..=3), 0..=max_len)
        .prop_map(|gs| Word::new(gs.into_iter().map(|(p, i)| Generator::new(p, i)).collect()))
}

/// Random (k, m) together with one word of length <= max_len.
fn scene(max_len: usize) -> impl Strategy<Value = (AlgebraParams, Word)> {
    (1usize..=3, 1i64..=2).prop_flat_map(move |(k, m)| {
        let params = AlgebraParams::new(k, m).unwrap();
        word_in(k, max_len).prop_map(move |w| (params, w))
    })
}

fn normal_form(word: &Word, params: &AlgebraParams) -> AlgebraElement {
    rewrite_to_admissible(&AlgebraElement::from_word(word.clone()), params, &Limits::default())
        .unwrap()
}

/// Sorted colour multiset of a word; rewrite steps only reorder factors.
fn colour_multiset(word: &Word) -> Vec<usize> {
    let mut colours: Vec<usize> = word.factors().iter().map(|g| g.colour).collect();
    colours.sort_unstable();
    colours
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Every word in a normal form is admissible.
    #[test]
    fn normal_form_is_admissible((params, word) in scene(4)) {
        let nf = normal_form(&word, &params);
        for (w, _) in nf.terms() {
            prop_assert!(is_admissible_word(w, &params), "inadmissible output {w}");
        }
    }

    /// Rewriting a normal form is the identity.
    #[test]
    fn rewrite_is_idempotent((params, word) in scene(4)) {
        let once = normal_form(&word, &params);
        let twice = rewrite_to_admissible(&once, &params, &Limits::default()).unwrap();
        prop_assert_eq!(once, twice);
    }

    /// An already admissible word is its own normal form.
    #[test]
    fn admissible_words_are_fixed((params, word) in scene(4)) {
        if is_admissible_word(&word, &params) {
            let nf = normal_form(&word, &params);
            prop_assert_eq!(nf, AlgebraElement::from_word(word));
        }
    }

    /// Each output word keeps the input's length, colour multiset, and total
    /// mode: the rewrite only redistributes modes inside adjacent pairs.
    #[test]
    fn rewrite_preserves_grading((params, word) in scene(4)) {
        let nf = normal_form(&word, &params);
        for (w, _) in nf.terms() {
            prop_assert_eq!(w.len(), word.len());
            prop_assert_eq!(w.mode_sum(), word.mode_sum());
            prop_assert_eq!(colour_multiset(w), colour_multiset(&word));
        }
    }

    /// A defining relation flanked by arbitrary words rewrites to zero.
    #[test]
    fn flanked_relations_vanish(
        (params, left) in scene(2),
        (p, q) in (1usize..=3, 1usize..=3),
        (r, s) in (-2i64..=2, -2i64..=2),
        right_raw in proptest::collection::vec((1usize..=3, -2i64..=2), 0..=2),
    ) {
        let k = params.k();
        let clamp = |c: usize| (c - 1) % k + 1;
        let right = Word::new(
            right_raw.into_iter().map(|(c, i)| Generator::new(clamp(c), i)).collect(),
        );
        let relation = relation_element(&params, clamp(p), clamp(q), r, s).unwrap();
        let mut flanked = AlgebraElement::zero();
        for (w, coeff) in relation.terms() {
            let mut factors = left.factors().to_vec();
            factors.extend_from_slice(w.factors());
            factors.extend_from_slice(right.factors());
            flanked.add_term(Word::new(factors), coeff.clone());
        }
        let nf = rewrite_to_admissible(&flanked, &params, &Limits::default()).unwrap();
        prop_assert!(nf.is_zero(), "non-zero normal form {:?}", nf.to_json());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// On the charge-zero vacuum the rewrite and the direct Fock action give
    /// the same vector: v . w == v . normal_form(w).
    #[test]
    fn rewrite_matches_fock_action((params, word) in scene(3)) {
        let cfg = LatticeConfig::new(params.k(), params.m()).unwrap();
        let charge = Charge::zero(params.k());
        let direct = evaluate_word(&word, &charge, &cfg).unwrap();
        let nf = normal_form(&word, &params);
        let via_nf = evaluate_element(&nf, &charge, &cfg).unwrap();
        prop_assert_eq!(direct, via_nf);
    }

    /// Printing and reparsing a non-empty word is the identity (the parser
    /// rejects empty input on purpose).
    #[test]
    fn word_display_parse_round_trip((_, word) in scene(4)) {
        prop_assume!(!word.is_empty());
        prop_assert_eq!(Word::parse(&word.to_string()).unwrap(), word);
    }
}
