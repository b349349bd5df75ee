//! Bigraded dimension counts of the Fock module: monomial bases at fixed
//! charge, bucketed by degree across a window of charges.

use super::space::{Charge, FockMonomial, LatticeConfig};
use crate::{Error, Limits, Result};
use std::collections::BTreeMap;

/// All monomials at the given charge with degree >= `degree_floor`, sorted.
/// Degree falls as creation parts accumulate, so the floor bounds the search:
/// the creation budget is vacuum_degree(h) - degree_floor.  A negative budget
/// means even the bare vacuum sits below the floor and the list is empty.
pub fn charge_monomials(
    cfg: &LatticeConfig,
    charge: &Charge,
    degree_floor: i64,
    limits: &Limits,
) -> Result<Vec<FockMonomial>> {
    cfg.check_charge(charge)?;
    let budget = cfg.vacuum_degree(charge) - degree_floor;
    let mut out = Vec::new();
    if budget < 0 {
        return Ok(out);
    }
    let mut stack = Vec::new();
    descend(cfg, charge, budget, (budget, cfg.k()), &mut stack, &mut out, limits)?;
    out.sort_unstable();
    Ok(out)
}

/// Extends the part stack with pairs that are weakly below `bound` in the
/// (mode, colour) order, so each multiset of parts is produced exactly once.
fn descend(
    cfg: &LatticeConfig,
    charge: &Charge,
    budget: i64,
    bound: (i64, usize),
    stack: &mut Vec<(usize, i64)>,
    out: &mut Vec<FockMonomial>,
    limits: &Limits,
) -> Result<()> {
    if out.len() as u64 >= limits.max_items {
        return Err(Error::Resource {
            what: format!("monomials at charge {:?}", charge.coords()),
            needed: format!("> {}", limits.max_items),
            cap: limits.max_items,
        });
    }
    out.push(FockMonomial::new(charge.clone(), stack.clone())?);
    for mode in (1..=budget.min(bound.0)).rev() {
        let colour_top = if mode == bound.0 { bound.1 } else { cfg.k() };
        for colour in (1..=colour_top).rev() {
            stack.push((colour, mode));
            descend(cfg, charge, budget - mode, (mode, colour), stack, out, limits)?;
            stack.pop();
        }
    }
    Ok(())
}

/// Dimension of each (degree, charge) slice of the Fock space, for charges
/// with every coordinate in -window..=window and degrees >= `degree_floor`.
pub fn fock_character(
    cfg: &LatticeConfig,
    window: i64,
    degree_floor: i64,
    limits: &Limits,
) -> Result<BTreeMap<(i64, Charge), u64>> {
    if window < 0 {
        return Err(Error::Domain(format!("negative charge window {window}")));
    }
    let mut out = BTreeMap::new();
    let mut coords = vec![-window; cfg.k()];
    loop {
        let charge = Charge::new(coords.clone());
        for mono in charge_monomials(cfg, &charge, degree_floor, limits)? {
            *out.entry((mono.degree(cfg), charge.clone())).or_insert(0) += 1;
        }
        // Odometer step through the charge box.
        let Some(i) = coords.iter().rposition(|&c| c < window) else {
            break;
        };
        coords[i] += 1;
        for c in &mut coords[i + 1..] {
            *c = -window;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_colour_listing() {
        let cfg = LatticeConfig::new(1, 1).unwrap();
        let lim = Limits::default();
        let got = charge_monomials(&cfg, &Charge::zero(1), -2, &lim).unwrap();
        let h = Charge::zero(1);
        let want = vec![
            FockMonomial::vacuum(h.clone()),
            FockMonomial::new(h.clone(), vec![(1, 1)]).unwrap(),
            FockMonomial::new(h.clone(), vec![(1, 1), (1, 1)]).unwrap(),
            FockMonomial::new(h.clone(), vec![(1, 2)]).unwrap(),
        ];
        assert_eq!(got, want);

        // Floor above the vacuum degree: nothing qualifies.
        assert!(charge_monomials(&cfg, &h, 1, &lim).unwrap().is_empty());
        // Floor exactly at the vacuum degree: just the vacuum.
        assert_eq!(charge_monomials(&cfg, &h, 0, &lim).unwrap().len(), 1);
    }

    #[test]
    fn degrees_respect_floor() {
        let cfg = LatticeConfig::new(2, 2).unwrap();
        let lim = Limits::default();
        let h = Charge::new(vec![1, 1]);
        let floor = -3;
        let monos = charge_monomials(&cfg, &h, floor, &lim).unwrap();
        assert!(monos.iter().all(|mo| mo.degree(&cfg) >= floor));
        // Parts of both colours appear.
        assert!(monos.iter().any(|mo| mo.parts().contains(&(2, 1))));
        // No duplicates.
        let mut dedup = monos.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), monos.len());
    }

    #[test]
    fn two_colour_counts_at_charge_zero() {
        // With k colours the count at depth d below the vacuum is the number
        // of k-coloured partitions of d: 1, 2, 5, 10 for k = 2.
        let cfg = LatticeConfig::new(2, 1).unwrap();
        let lim = Limits::default();
        let monos = charge_monomials(&cfg, &Charge::zero(2), -3, &lim).unwrap();
        let mut by_degree = BTreeMap::new();
        for mo in &monos {
            *by_degree.entry(mo.degree(&cfg)).or_insert(0u64) += 1;
        }
        let want: BTreeMap<i64, u64> =
            [(-3, 10), (-2, 5), (-1, 2), (0, 1)].into_iter().collect();
        assert_eq!(by_degree, want);
    }

    #[test]
    fn character_buckets() {
        let cfg = LatticeConfig::new(1, 1).unwrap();
        let lim = Limits::default();
        let table = fock_character(&cfg, 1, -2, &lim).unwrap();
        let get = |d: i64, c: i64| table.get(&(d, Charge::new(vec![c]))).copied().unwrap_or(0);
        // Charge -1 vacuum sits at degree 1; charges 0 and 1 at degree 0.
        assert_eq!(get(1, -1), 1);
        assert_eq!(get(0, -1), 1);
        assert_eq!(get(-1, -1), 2);
        assert_eq!(get(-2, -1), 3);
        assert_eq!(get(0, 0), 1);
        assert_eq!(get(-1, 0), 1);
        assert_eq!(get(-2, 0), 2);
        assert_eq!(get(0, 1), 1);
        assert_eq!(get(-1, 1), 1);
        assert_eq!(get(-2, 1), 2);
        assert_eq!(get(1, 0), 0);
        // Every bucketed charge stays inside the window.
        assert!(table.keys().all(|(_, h)| h.coords().iter().all(|c| c.abs() <= 1)));
    }

    #[test]
    fn item_cap_is_enforced() {
        let cfg = LatticeConfig::new(2, 1).unwrap();
        let tight = Limits { max_items: 3, ..Limits::default() };
        assert!(matches!(
            charge_monomials(&cfg, &Charge::zero(2), -4, &tight),
            Err(Error::Resource { .. })
        ));
    }
}
