//! The defining relation family and the terminating rewrite onto admissible
//! normal form.
//!
//! The relation for parameters (k, m) and colours p, q reads
//!
//! ```text
//! sum_{i=0}^{m} (-1)^i C(m,i) [e_p[r-i], e_q[s+i]]_m = 0,
//! [a, b]_m = a b - (-1)^m b a.
//! ```
//!
//! Solving it for the word with the largest second mode expresses
//! e_p[a] e_q[b] (with b - a > m, or b - a = m and p > q) through words whose
//! pair either has a strictly smaller mode gap or is already in normal order:
//!
//! ```text
//! e_p[a] e_q[b] = - sum_{i=0}^{m-1} (-1)^{m+i} C(m,i) e_p[a+m-i] e_q[b-m+i]
//!                 + sum_{i=0}^{m}   (-1)^i     C(m,i) e_q[b-m+i] e_p[a+m-i]
//! ```
//!
//! Each step preserves word length, the colour multiset, and the total mode
//! sum, so these are cheap invariants to assert in tests.

use super::element::{AlgebraElement, AlgebraParams, Generator, Word};
use crate::combinatorics::binomial;
use crate::{Error, Limits, Rat, Result};
use num::bigint::BigInt;

fn signed_binomial(m: i64, i: i64, negate: bool) -> Rat {
    let mut c = BigInt::from(binomial(m as u64, i as u64));
    if (i % 2 != 0) != negate {
        c = -c;
    }
    Rat::from_integer(c)
}

/// The two-generator identity instance at colours (p, q) and modes (r, s), as
/// an element that the rewrite must annihilate.
pub fn relation_element(
    params: &AlgebraParams,
    p: usize,
    q: usize,
    r: i64,
    s: i64,
) -> Result<AlgebraElement> {
    params.check_colour(p)?;
    params.check_colour(q)?;
    let m = params.m();
    let mut out = AlgebraElement::zero();
    for i in 0..=m {
        let fwd = Word::new(vec![Generator::new(p, r - i), Generator::new(q, s + i)]);
        let rev = Word::new(vec![Generator::new(q, s + i), Generator::new(p, r - i)]);
        out.add_term(fwd, signed_binomial(m, i, false));
        // -(-1)^m times the reversed word: flip the sign exactly when m is even.
        out.add_term(rev, signed_binomial(m, i, m % 2 == 0));
    }
    Ok(out)
}

/// An adjacent pair e_p[a] e_q[b] is in normal order when b - a < m, or
/// b - a = m and p <= q.
fn pair_violates(a: Generator, b: Generator, m: i64) -> bool {
    let gap = b.mode - a.mode;
    gap > m || (gap == m && a.colour > b.colour)
}

fn leftmost_violation(word: &Word, m: i64) -> Option<usize> {
    word.factors().windows(2).position(|w| pair_violates(w[0], w[1], m))
}

/// True when the word is killed by nothing and needs no rewriting: its first
/// factor has mode <= 0 and every adjacent pair is in normal order.  The
/// vacuum itself qualifies.
pub fn is_admissible_word(word: &Word, params: &AlgebraParams) -> bool {
    if word.factors().first().is_some_and(|g| g.mode > 0) {
        return false;
    }
    leftmost_violation(word, params.m()).is_none()
}

/// The replacement words for one violating pair, with their coefficients.
fn pair_replacements(a: Generator, b: Generator, m: i64) -> Vec<(Generator, Generator, Rat)> {
    debug_assert!(pair_violates(a, b, m));
    let mut out = Vec::with_capacity(2 * m as usize + 1);
    for i in 0..m {
        let fst = Generator::new(a.colour, a.mode + m - i);
        let snd = Generator::new(b.colour, b.mode - m + i);
        // Same colour order, gap shrunk by 2(m - i) >= 2.
        debug_assert!(snd.mode - fst.mode < b.mode - a.mode);
        // -(-1)^{m+i} C(m,i): relative to (-1)^i C(m,i) this flips the sign
        // exactly when m is even.
        out.push((fst, snd, signed_binomial(m, i, m % 2 == 0)));
    }
    for i in 0..=m {
        let fst = Generator::new(b.colour, b.mode - m + i);
        let snd = Generator::new(a.colour, a.mode + m - i);
        debug_assert!(!pair_violates(fst, snd, m));
        out.push((fst, snd, signed_binomial(m, i, false)));
    }
    out
}

/// Expands an element over admissible words: leading factors with positive
/// mode annihilate the vacuum, and the leftmost out-of-order pair is rewritten
/// until none remains.  Idempotent; fuel-limited as a guard against bugs, with
/// the step budget taken from `limits.max_rewrite_steps`.
pub fn rewrite_to_admissible(
    elem: &AlgebraElement,
    params: &AlgebraParams,
    limits: &Limits,
) -> Result<AlgebraElement> {
    let m = params.m();
    let mut out = AlgebraElement::zero();
    let mut work: Vec<(Word, Rat)> = Vec::with_capacity(elem.num_terms());
    for (word, coeff) in elem.terms() {
        params.check_word(word)?;
        work.push((word.clone(), coeff.clone()));
    }
    let mut steps: u64 = 0;
    while let Some((word, coeff)) = work.pop() {
        if word.factors().first().is_some_and(|g| g.mode > 0) {
            continue;
        }
        let Some(s) = leftmost_violation(&word, m) else {
            out.add_term(word, coeff);
            continue;
        };
        steps += 1;
        if steps > limits.max_rewrite_steps {
            return Err(Error::Fuel { steps });
        }
        let factors = word.factors();
        for (fst, snd, c) in pair_replacements(factors[s], factors[s + 1], m) {
            let mut next = factors.to_vec();
            next[s] = fst;
            next[s + 1] = snd;
            work.push((Word::new(next), &coeff * c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: usize, m: i64) -> AlgebraParams {
        AlgebraParams::new(k, m).unwrap()
    }

    fn rewrite_word(text: &str, k: usize, m: i64) -> AlgebraElement {
        let elem = AlgebraElement::from_word(Word::parse(text).unwrap());
        rewrite_to_admissible(&elem, &params(k, m), &Limits::default()).unwrap()
    }

    fn coeffs(elem: &AlgebraElement) -> std::collections::BTreeMap<String, Rat> {
        elem.terms().map(|(w, c)| (w.to_string(), c.clone())).collect()
    }

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn relation_element_m1() {
        let rel = relation_element(&params(1, 1), 1, 1, 0, 2).unwrap();
        let want: std::collections::BTreeMap<String, Rat> = [
            ("e1[0] e1[2]".to_string(), rat(1)),
            ("e1[2] e1[0]".to_string(), rat(1)),
            ("e1[-1] e1[3]".to_string(), rat(-1)),
            ("e1[3] e1[-1]".to_string(), rat(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(coeffs(&rel), want);
    }

    #[test]
    fn relation_element_m2_binomials() {
        // At p = q, r = s the i = 0 bracket collapses, leaving the 1,-2,1
        // binomial pattern on the two surviving bracket pairs.
        let rel = relation_element(&params(1, 2), 1, 1, 0, 0).unwrap();
        let want: std::collections::BTreeMap<String, Rat> = [
            ("e1[-1] e1[1]".to_string(), rat(-2)),
            ("e1[1] e1[-1]".to_string(), rat(2)),
            ("e1[-2] e1[2]".to_string(), rat(1)),
            ("e1[2] e1[-2]".to_string(), rat(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(coeffs(&rel), want);
    }

    #[test]
    fn relation_rejects_bad_colours() {
        assert!(relation_element(&params(2, 1), 3, 1, 0, 0).is_err());
    }

    #[test]
    fn rewrite_known_normal_forms() {
        assert!(rewrite_word("e1[0] e1[2]", 1, 1).is_zero());
        assert_eq!(
            coeffs(&rewrite_word("e2[0] e1[1]", 2, 1)),
            [("e1[0] e2[1]".to_string(), rat(1))].into_iter().collect()
        );
        assert_eq!(
            coeffs(&rewrite_word("e1[0] e1[1]", 1, 1)),
            [("e1[0] e1[1]".to_string(), rat(1))].into_iter().collect()
        );
        assert!(rewrite_word("e1[1]", 1, 1).is_zero());
        // Mode sum 4 exceeds the largest admissible mode sum for three
        // factors at m = 1, so this must vanish.
        assert!(rewrite_word("e1[0] e1[1] e1[3]", 1, 1).is_zero());
    }

    #[test]
    fn rewrite_leaves_admissible_words() {
        for (text, k, m) in [
            ("e1[0] e1[3] e2[1]", 2, 1i64),
            ("e2[0] e1[2] e1[0]", 2, 2),
            ("e3[0] e2[1] e1[2]", 3, 1),
            ("e1[-2] e1[5]", 1, 1),
        ] {
            let p = params(k, m);
            let out = rewrite_to_admissible(
                &AlgebraElement::from_word(Word::parse(text).unwrap()),
                &p,
                &Limits::default(),
            )
            .unwrap();
            for (w, _) in out.terms() {
                assert!(is_admissible_word(w, &p), "{text} left {w}");
            }
            // Idempotence.
            assert_eq!(rewrite_to_admissible(&out, &p, &Limits::default()).unwrap(), out);
        }
    }

    #[test]
    fn rewrite_preserves_gradings() {
        let input = Word::parse("e2[0] e2[1] e1[2]").unwrap();
        let out = rewrite_to_admissible(
            &AlgebraElement::from_word(input.clone()),
            &params(2, 1),
            &Limits::default(),
        )
        .unwrap();
        assert!(!out.is_zero());
        for (w, _) in out.terms() {
            assert_eq!(w.mode_sum(), input.mode_sum());
            assert_eq!(w.len(), input.len());
            let colours = |word: &Word| {
                let mut v: Vec<usize> = word.factors().iter().map(|g| g.colour).collect();
                v.sort_unstable();
                v
            };
            assert_eq!(colours(w), colours(&input));
        }
    }

    #[test]
    fn relations_rewrite_to_zero() {
        let lim = Limits::default();
        for m in 1..=2i64 {
            let p = params(2, m);
            for (cp, cq) in [(1, 1), (1, 2), (2, 1)] {
                for r in -2..=2i64 {
                    for s in -2..=3i64 {
                        let rel = relation_element(&p, cp, cq, r, s).unwrap();
                        let nf = rewrite_to_admissible(&rel, &p, &lim).unwrap();
                        assert!(nf.is_zero(), "m={m} p={cp} q={cq} r={r} s={s}: {nf}");
                    }
                }
            }
        }
    }

    #[test]
    fn flanked_relations_rewrite_to_zero() {
        let lim = Limits::default();
        let p = params(2, 1);
        let rel = relation_element(&p, 2, 1, 1, 1).unwrap();
        for left in ["e1[0]", "e2[0] e1[1]"] {
            for right in ["e1[1]", "e2[0]"] {
                let lw = Word::parse(left).unwrap();
                let rw = Word::parse(right).unwrap();
                let mut flanked = AlgebraElement::zero();
                for (w, c) in rel.terms() {
                    let factors: Vec<Generator> = lw
                        .factors()
                        .iter()
                        .chain(w.factors())
                        .chain(rw.factors())
                        .copied()
                        .collect();
                    flanked.add_term(Word::new(factors), c.clone());
                }
                let nf = rewrite_to_admissible(&flanked, &p, &lim).unwrap();
                assert!(nf.is_zero(), "{left} | {right}: {nf}");
            }
        }
    }

    #[test]
    fn fuel_runs_out() {
        let tight = Limits { max_rewrite_steps: 1, ..Limits::default() };
        let elem = AlgebraElement::from_word(Word::parse("e1[0] e1[1] e1[3]").unwrap());
        assert!(matches!(
            rewrite_to_admissible(&elem, &params(1, 1), &tight),
            Err(Error::Fuel { .. })
        ));
    }

    #[test]
    fn vacuum_is_fixed() {
        let elem = AlgebraElement::from_word(Word::empty());
        let out = rewrite_to_admissible(&elem, &params(1, 1), &Limits::default()).unwrap();
        assert_eq!(out, elem);
    }
}
