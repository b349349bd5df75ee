//! Charges, Fock monomials, and their rational combinations.

use crate::{ratio, Error, Rat, Result};
use num::traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::ops::{AddAssign, Neg, SubAssign};

/// A rank-k lattice whose Gram form is constantly -m, diagonal included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeConfig {
    k: usize,
    m: i64,
}

impl LatticeConfig {
    pub fn new(k: usize, m: i64) -> Result<Self> {
        if k < 1 || m < 1 {
            return Err(Error::Domain(format!("need k >= 1 and m >= 1, got k={k}, m={m}")));
        }
        Ok(LatticeConfig { k, m })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// (f_p, f_q), the same value for every colour pair.
    pub fn gram(&self) -> i64 {
        -self.m
    }

    /// (h, f_p) for h = sum c_p f_p; colour-independent because the form is
    /// constant: gram * sum(c).
    pub fn charge_pairing(&self, h: &Charge) -> i64 {
        self.gram() * h.sum()
    }

    /// The degree of the bare vacuum v_h in the q-grading, m(s^2 - s)/2 with
    /// s = sum(c); always an integer since s^2 - s is even.
    pub fn vacuum_degree(&self, h: &Charge) -> i64 {
        let s = h.sum();
        -(self.gram() * (s * s - s)) / 2
    }

    pub fn check_colour(&self, p: usize) -> Result<()> {
        if p == 0 || p > self.k {
            return Err(Error::Domain(format!("colour {p} outside 1..={}", self.k)));
        }
        Ok(())
    }

    pub fn check_charge(&self, h: &Charge) -> Result<()> {
        if h.len() != self.k {
            return Err(Error::Domain(format!(
                "charge has {} coordinates, lattice rank is {}",
                h.len(),
                self.k
            )));
        }
        Ok(())
    }
}

/// A lattice element h = sum c_p f_p, stored by coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Charge(Vec<i64>);

impl Charge {
    pub fn new(coords: Vec<i64>) -> Self {
        Charge(coords)
    }

    pub fn zero(k: usize) -> Self {
        Charge(vec![0; k])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// h + f_p for a 1-based colour.
    pub fn bumped(&self, colour: usize) -> Self {
        let mut coords = self.0.clone();
        coords[colour - 1] += 1;
        Charge(coords)
    }
}

/// A charged vacuum decorated with creation parts: v_h f_{q1}[-j1] f_{q2}[-j2] …
/// with all j >= 1.  Parts are kept sorted so equal monomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockMonomial {
    charge: Charge,
    parts: Vec<(usize, i64)>,
}

impl FockMonomial {
    pub fn vacuum(charge: Charge) -> Self {
        FockMonomial { charge, parts: Vec::new() }
    }

    pub fn new(charge: Charge, mut parts: Vec<(usize, i64)>) -> Result<Self> {
        if let Some(&(q, j)) = parts.iter().find(|&&(q, j)| q == 0 || j < 1) {
            return Err(Error::Domain(format!(
                "creation part ({q}, {j}) needs colour >= 1 and mode >= 1"
            )));
        }
        parts.sort_unstable();
        Ok(FockMonomial { charge, parts })
    }

    pub fn charge(&self) -> &Charge {
        &self.charge
    }

    pub fn parts(&self) -> &[(usize, i64)] {
        &self.parts
    }

    /// Sum of the creation modes.
    pub fn creation_degree(&self) -> i64 {
        self.parts.iter().map(|&(_, j)| j).sum()
    }

    /// Position in the q-grading: the vacuum degree of the charge minus the
    /// creation degree.
    pub fn degree(&self, cfg: &LatticeConfig) -> i64 {
        cfg.vacuum_degree(&self.charge) - self.creation_degree()
    }

    pub(crate) fn with_part(&self, colour: usize, mode: i64) -> Self {
        debug_assert!(mode >= 1);
        let mut parts = self.parts.clone();
        let at = parts.partition_point(|&entry| entry < (colour, mode));
        parts.insert(at, (colour, mode));
        FockMonomial { charge: self.charge.clone(), parts }
    }

    /// Adjoins one part per listed mode, all on the same colour, in one pass.
    pub(crate) fn with_parts(&self, colour: usize, modes: &[usize]) -> Self {
        let mut parts = self.parts.clone();
        parts.reserve(modes.len());
        parts.extend(modes.iter().map(|&j| (colour, j as i64)));
        parts.sort_unstable();
        FockMonomial { charge: self.charge.clone(), parts }
    }

    pub(crate) fn without_part_at(&self, idx: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.remove(idx);
        FockMonomial { charge: self.charge.clone(), parts }
    }

    pub(crate) fn with_charge_bumped(&self, colour: usize) -> Self {
        FockMonomial { charge: self.charge.bumped(colour), parts: self.parts.clone() }
    }
}

/// A finite rational combination of Fock monomials; zero coefficients are
/// never stored.  Charges may mix in intermediate sums, but every operation
/// that needs a single charge checks for it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockElement {
    terms: BTreeMap<FockMonomial, Rat>,
}

impl FockElement {
    pub fn zero() -> Self {
        FockElement::default()
    }

    pub fn vacuum(charge: Charge) -> Self {
        FockElement::from_monomial(FockMonomial::vacuum(charge))
    }

    pub fn from_monomial(mono: FockMonomial) -> Self {
        FockElement::term(Rat::from_integer(1.into()), mono)
    }

    pub fn term(coeff: Rat, mono: FockMonomial) -> Self {
        let mut out = FockElement::zero();
        out.add_term(mono, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &FockMonomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, mono: FockMonomial, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
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
            return FockElement::zero();
        }
        FockElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * factor)).collect(),
        }
    }

    /// The charge shared by all terms: `None` for the zero element, an error
    /// if two terms disagree.
    pub fn homogeneous_charge(&self) -> Result<Option<&Charge>> {
        let mut found: Option<&Charge> = None;
        for (mono, _) in self.terms() {
            match found {
                None => found = Some(mono.charge()),
                Some(h) if h == mono.charge() => {}
                Some(h) => {
                    return Err(Error::ChargeMixing(format!(
                        "terms at charges {:?} and {:?}",
                        h.coords(),
                        mono.charge().coords()
                    )))
                }
            }
        }
        Ok(found)
    }

    /// Largest creation degree over the terms; 0 for the zero element.
    pub fn max_creation_degree(&self) -> i64 {
        self.terms.keys().map(FockMonomial::creation_degree).max().unwrap_or(0)
    }

    pub(crate) fn charge_bumped(&self, colour: usize) -> Self {
        FockElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_charge_bumped(colour), c.clone()))
                .collect(),
        }
    }

    /// Wire form `{"charge": […], "terms": [{"coeff", "parts"}…]}`; the zero
    /// element carries a null charge.  Mixed charges are an error.
    pub fn to_json(&self) -> Result<Value> {
        let charge = match self.homogeneous_charge()? {
            None => Value::Null,
            Some(h) => json!(h.coords()),
        };
        Ok(json!({
            "charge": charge,
            "terms": self
                .terms
                .iter()
                .map(|(mono, coeff)| {
                    json!({
                        "coeff": ratio::to_wire(coeff),
                        "parts": mono.parts().iter().map(|&(q, j)| json!([q, j])).collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        }))
    }
}

impl AddAssign<&FockElement> for FockElement {
    fn add_assign(&mut self, rhs: &FockElement) {
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&FockElement> for FockElement {
    fn sub_assign(&mut self, rhs: &FockElement) {
        for (m, c) in rhs.terms() {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Neg for FockElement {
    type Output = FockElement;

    fn neg(self) -> FockElement {
        FockElement {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}
