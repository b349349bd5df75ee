//! Finite S_n-sets: orbit counting under Young subgroups, fixed points, and
//! the Frobenius character in the monomial basis.

use super::expansion::MonomialExpansion;
use super::partition::{partitions_of, Partition};
use crate::combinatorics::{enumerate_parking_functions, ParkingFunction};
use crate::perm::Permutation;
use crate::{Error, Limits, Result};
use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

/// How one permutation moves one element.
pub type Action<T> = Box<dyn Fn(&Permutation, &T) -> T + Send + Sync>;

/// A finite set with an S_n action given by a closure.  Elements are kept in
/// their construction order; an index map supports fixed-point lookups.
pub struct SetRepresentation<T> {
    degree: usize,
    elements: Vec<T>,
    index: HashMap<T, usize>,
    action: Action<T>,
}

impl<T: Clone + Eq + Hash> SetRepresentation<T> {
    pub fn new(degree: usize, elements: Vec<T>, action: Action<T>) -> Result<Self> {
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::Domain("duplicate element".into()));
            }
        }
        Ok(SetRepresentation { degree, elements, index, action })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn act(&self, g: &Permutation, e: &T) -> T {
        (self.action)(g, e)
    }

    fn index_of(&self, e: &T) -> Result<usize> {
        self.index
            .get(e)
            .copied()
            .ok_or_else(|| Error::Invariant("action left the element set".into()))
    }

    pub fn fixed_count(&self, g: &Permutation) -> Result<u64> {
        if g.degree() != self.degree {
            return Err(Error::Domain(format!(
                "permutation degree {} does not match set degree {}",
                g.degree(),
                self.degree
            )));
        }
        let mut count = 0;
        for e in &self.elements {
            let image = self.act(g, e);
            self.index_of(&image)?;
            if &image == e {
                count += 1;
            }
        }
        Ok(count)
    }
}

/// Orbit count of the Young subgroup S_mu (acting through the generators
/// that transpose adjacent points inside each consecutive block).
pub fn young_subgroup_orbits<T: Clone + Eq + Hash>(
    rep: &SetRepresentation<T>,
    mu: &Partition,
) -> Result<u64> {
    let n = rep.degree();
    if mu.weight() != n {
        return Err(Error::Domain(format!(
            "partition {mu} has weight {}, expected {n}",
            mu.weight()
        )));
    }
    // Adjacent transpositions inside each block generate S_mu.
    let mut gens = Vec::new();
    let mut base = 1;
    for &part in mu.parts() {
        for t in base..base + part - 1 {
            let mut img: Vec<usize> = (1..=n).collect();
            img.swap(t - 1, t);
            gens.push(Permutation::new(img)?);
        }
        base += part;
    }

    // Union-find over element indices.
    let mut parent: Vec<usize> = (0..rep.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (i, e) in rep.elements().iter().enumerate() {
        for g in &gens {
            let j = rep.index_of(&rep.act(g, e))?;
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let mut roots = 0;
    for i in 0..rep.len() {
        if find(&mut parent, i) == i {
            roots += 1;
        }
    }
    Ok(roots)
}

/// The Frobenius character of the set in the monomial basis: the coefficient
/// of m_mu is the number of S_mu-orbits.
pub fn frobenius_monomial_expansion<T: Clone + Eq + Hash>(
    rep: &SetRepresentation<T>,
) -> Result<MonomialExpansion> {
    let n = rep.degree();
    let mut coeffs = BTreeMap::new();
    for mu in partitions_of(n) {
        let c = young_subgroup_orbits(rep, &mu)? as i64;
        if c != 0 {
            coeffs.insert(mu, c);
        }
    }
    MonomialExpansion::new(n, coeffs)
}

/// Character value on the conjugacy class with the given cycle type: the
/// number of fixed elements of the canonical representative.
pub fn permutation_character<T: Clone + Eq + Hash>(
    rep: &SetRepresentation<T>,
    cycle_type: &Partition,
) -> Result<u64> {
    if cycle_type.weight() != rep.degree() {
        return Err(Error::Domain(format!(
            "cycle type {cycle_type} has weight {}, expected {}",
            cycle_type.weight(),
            rep.degree()
        )));
    }
    rep.fixed_count(&Permutation::with_cycle_type(cycle_type.parts())?)
}

/// Parking functions of length n for slope m with S_n permuting arguments:
/// (g . f)(g(j)) = f(j).
pub fn parking_representation(
    n: usize,
    m: usize,
    limits: &Limits,
) -> Result<SetRepresentation<ParkingFunction>> {
    let elements = enumerate_parking_functions(n, m, limits)?;
    let action = Box::new(move |g: &Permutation, f: &ParkingFunction| {
        let mut values = vec![0usize; f.len()];
        for j in 1..=f.len() {
            values[g.apply(j) - 1] = f.values()[j - 1];
        }
        ParkingFunction::new(values, m).expect("argument permutation preserves parking")
    });
    SetRepresentation::new(n, elements, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf_rep(n: usize) -> SetRepresentation<ParkingFunction> {
        parking_representation(n, 1, &Limits::default()).unwrap()
    }

    fn mu(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn orbit_examples() {
        let rep = pf_rep(2);
        assert_eq!(young_subgroup_orbits(&rep, &mu(&[2])).unwrap(), 2);
        assert_eq!(young_subgroup_orbits(&rep, &mu(&[1, 1])).unwrap(), 3);
        let rep3 = pf_rep(3);
        assert_eq!(young_subgroup_orbits(&rep3, &mu(&[3])).unwrap(), 5);
        assert_eq!(young_subgroup_orbits(&rep3, &mu(&[2, 1])).unwrap(), 10);
        assert_eq!(young_subgroup_orbits(&rep3, &mu(&[1, 1, 1])).unwrap(), 16);
    }

    #[test]
    fn sorted_values_oracle_for_full_orbits() {
        // Independent route for mu = (n): orbits are value multisets, and
        // those are counted by Catalan numbers.
        use crate::combinatorics::catalan;
        use num::ToPrimitive;
        for n in 1..=6usize {
            let rep = pf_rep(n);
            let mut multisets = std::collections::HashSet::new();
            for f in rep.elements() {
                let mut v = f.values().to_vec();
                v.sort_unstable();
                multisets.insert(v);
            }
            let orbits = young_subgroup_orbits(&rep, &mu(&[n])).unwrap();
            assert_eq!(orbits, multisets.len() as u64);
            assert_eq!(orbits, catalan(n as u64).to_u64().unwrap());
        }
    }

    #[test]
    fn frobenius_examples() {
        let e1 = frobenius_monomial_expansion(&pf_rep(1)).unwrap();
        assert_eq!(e1.coefficient(&mu(&[1])), 1);
        let e2 = frobenius_monomial_expansion(&pf_rep(2)).unwrap();
        assert_eq!(e2.coefficient(&mu(&[2])), 2);
        assert_eq!(e2.coefficient(&mu(&[1, 1])), 3);
    }

    #[test]
    fn fixed_points_match_character() {
        use crate::combinatorics::fixed_parking_functions;
        let lim = Limits::default();
        for n in 1..=4usize {
            let rep = pf_rep(n);
            for class in partitions_of(n) {
                let via_rep = permutation_character(&rep, &class).unwrap();
                let g = Permutation::with_cycle_type(class.parts()).unwrap();
                let via_cycles = fixed_parking_functions(&g, 1, &lim).unwrap();
                assert_eq!(via_rep, via_cycles, "n={n} class={class}");
            }
        }
    }

    #[test]
    fn action_composes() {
        let rep = pf_rep(3);
        for g in Permutation::all(3) {
            for h in Permutation::all(3) {
                let gh = g.compose(&h);
                for f in rep.elements().iter().take(6) {
                    assert_eq!(rep.act(&gh, f), rep.act(&g, &rep.act(&h, f)));
                }
            }
        }
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let rep = pf_rep(2);
        assert!(permutation_character(&rep, &mu(&[3])).is_err());
        assert!(young_subgroup_orbits(&rep, &mu(&[2, 1])).is_err());
    }
}
