//! Generators, words, and their rational linear combinations.

use crate::{ratio, Error, Rat, Result};
use num::traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Neg, SubAssign};

/// Parameters of one algebra: k colours and relation degree m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlgebraParams {
    k: usize,
    m: i64,
}

impl AlgebraParams {
    pub fn new(k: usize, m: i64) -> Result<Self> {
        if k < 1 || m < 1 {
            return Err(Error::Domain(format!("need k >= 1 and m >= 1, got k={k}, m={m}")));
        }
        Ok(AlgebraParams { k, m })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn check_colour(&self, p: usize) -> Result<()> {
        if p == 0 || p > self.k {
            return Err(Error::Domain(format!("colour {p} outside 1..={}", self.k)));
        }
        Ok(())
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.factors().iter().try_for_each(|g| self.check_colour(g.colour))
    }
}

/// One generator e_p[i]: colour p >= 1 and an arbitrary integer mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub colour: usize,
    pub mode: i64,
}

impl Generator {
    pub fn new(colour: usize, mode: i64) -> Self {
        Generator { colour, mode }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}[{}]", self.colour, self.mode)
    }
}

/// A product of generators applied to the vacuum, factors left to right.
/// Arbitrary modes are allowed; admissibility is produced by the rewrite.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    factors: Vec<Generator>,
}

impl Word {
    pub fn new(factors: Vec<Generator>) -> Self {
        Word { factors }
    }

    /// The bare vacuum.
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total mode degree; preserved by every rewrite step.
    pub fn mode_sum(&self) -> i64 {
        self.factors.iter().map(|g| g.mode).sum()
    }

    /// Parses the plain-text grammar: `e<p>[<i>]` tokens separated by spaces,
    /// e.g. `e2[0] e1[-1]`.  Errors carry the byte offset of the problem.
    pub fn parse(input: &str) -> Result<Self> {
        let bytes = input.as_bytes();
        let mut pos = 0;
        let mut factors = Vec::new();
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if bytes[pos] != b'e' {
                return Err(parse_err(pos, "expected a generator of the form e<p>[<i>]"));
            }
            pos += 1;
            let (colour, next) = scan_unsigned(bytes, pos)?;
            pos = next;
            if colour == 0 {
                return Err(parse_err(pos - 1, "colour must be at least 1"));
            }
            if pos >= bytes.len() || bytes[pos] != b'[' {
                return Err(parse_err(pos, "expected `[` after the colour"));
            }
            pos += 1;
            let negative = pos < bytes.len() && bytes[pos] == b'-';
            if negative {
                pos += 1;
            }
            let (mag, next) = scan_unsigned(bytes, pos)?;
            pos = next;
            if mag > i64::MAX as u64 {
                return Err(parse_err(pos - 1, "mode out of range"));
            }
            let mode = if negative { -(mag as i64) } else { mag as i64 };
            if pos >= bytes.len() || bytes[pos] != b']' {
                return Err(parse_err(pos, "expected `]` after the mode"));
            }
            pos += 1;
            factors.push(Generator::new(colour as usize, mode));
        }
        if factors.is_empty() {
            return Err(parse_err(0, "empty word"));
        }
        Ok(Word { factors })
    }
}

fn parse_err(position: usize, message: &str) -> Error {
    Error::Parse { position, message: message.into() }
}

fn scan_unsigned(bytes: &[u8], start: usize) -> Result<(u64, usize)> {
    let mut pos = start;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err(parse_err(start, "expected a number"));
    }
    let text = std::str::from_utf8(&bytes[start..pos]).expect("digits are ASCII");
    let value = text
        .parse::<u64>()
        .map_err(|_| parse_err(start, "number out of range"))?;
    Ok((value, pos))
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word { factors: iter.into_iter().collect() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, g) in self.factors.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A finite rational combination of words.  Zero coefficients are never
/// stored, so structural equality is equality in the module.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, Rat>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn from_word(word: Word) -> Self {
        AlgebraElement::term(Rat::from_integer(1.into()), word)
    }

    pub fn term(coeff: Rat, word: Word) -> Self {
        let mut out = AlgebraElement::zero();
        out.add_term(word, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    /// The coefficient of a word, zero when absent.
    pub fn coefficient(&self, word: &Word) -> Rat {
        self.terms.get(word).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, word: Word, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scaled(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * factor)).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(word, coeff)| {
                    json!({
                        "coeff": ratio::to_wire(coeff),
                        "word": word.factors().iter().map(|g| json!([g.colour, g.mode])).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

impl AddAssign<&AlgebraElement> for AlgebraElement {
    fn add_assign(&mut self, rhs: &AlgebraElement) {
        for (w, c) in rhs.terms() {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&AlgebraElement> for AlgebraElement {
    fn sub_assign(&mut self, rhs: &AlgebraElement) {
        for (w, c) in rhs.terms() {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;

    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    /// One term per line as `<+/-coeff> <word>`; the zero element prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (word, coeff)) in self.terms.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", ratio::signed_display(coeff))?;
            if !word.is_empty() {
                write!(f, " {word}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn parse_round_trips_display() {
        for text in ["e1[0]", "e2[0] e1[1]", "e1[-3] e12[40] e1[0]"] {
            let w = Word::parse(text).unwrap();
            assert_eq!(w.to_string(), text);
        }
        let w = Word::parse("  e1[0]   e2[-1] ").unwrap();
        assert_eq!(w.to_string(), "e1[0] e2[-1]");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let cases = [
            ("", 0),
            ("f1[0]", 0),
            ("e[0]", 1),
            ("e1(0)", 2),
            ("e1[zero]", 3),
            ("e1[0", 4),
            ("e1[0] e", 7),
            ("e0[1]", 1),
        ];
        for (text, want_pos) in cases {
            match Word::parse(text) {
                Err(Error::Parse { position, .. }) => {
                    assert_eq!(position, want_pos, "input {text:?}");
                }
                other => panic!("expected parse error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn zero_coefficients_vanish() {
        let w = Word::parse("e1[0]").unwrap();
        let mut elem = AlgebraElement::term(rat(2), w.clone());
        elem.add_term(w.clone(), rat(-2));
        assert!(elem.is_zero());
        assert_eq!(elem.to_string(), "0");
        assert_eq!(elem.coefficient(&w), rat(0));
        assert!(AlgebraElement::term(rat(0), w).is_zero());
    }

    #[test]
    fn display_matches_term_grammar() {
        let w1 = Word::parse("e1[0] e2[1]").unwrap();
        let elem = AlgebraElement::from_word(w1);
        assert_eq!(elem.to_string(), "+1 e1[0] e2[1]");

        let mut multi = elem.clone();
        multi.add_term(Word::parse("e1[0]").unwrap(), Rat::new((-3).into(), 2.into()));
        assert_eq!(multi.to_string(), "-3/2 e1[0]\n+1 e1[0] e2[1]");
    }

    #[test]
    fn add_sub_neg() {
        let w1 = Word::parse("e1[0]").unwrap();
        let w2 = Word::parse("e1[1]").unwrap();
        let mut a = AlgebraElement::term(rat(2), w1.clone());
        let b = AlgebraElement::term(rat(3), w2.clone());
        a += &b;
        a -= &AlgebraElement::term(rat(2), w1.clone());
        assert_eq!(a, b);
        assert_eq!((-a).coefficient(&w2), rat(-3));
    }

    #[test]
    fn json_shape() {
        let mut elem = AlgebraElement::from_word(Word::parse("e1[0] e2[-1]").unwrap());
        elem.add_term(Word::parse("e1[0]").unwrap(), Rat::new(1.into(), 2.into()));
        let v = elem.to_json();
        assert_eq!(
            v,
            serde_json::json!([
                {"coeff": "1/2", "word": [[1, 0]]},
                {"coeff": "1/1", "word": [[1, 0], [2, -1]]},
            ])
        );
        assert_eq!(AlgebraElement::zero().to_json(), serde_json::json!([]));
    }

    #[test]
    fn params_validate() {
        assert!(AlgebraParams::new(0, 1).is_err());
        assert!(AlgebraParams::new(1, 0).is_err());
        let params = AlgebraParams::new(2, 1).unwrap();
        assert!(params.check_word(&Word::parse("e1[0] e2[5]").unwrap()).is_ok());
        assert!(params.check_word(&Word::parse("e3[0]").unwrap()).is_err());
    }
}
