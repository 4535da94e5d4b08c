//! Placement spectra and pairwise comparison of placements.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fragile::expected_value_poly;
use crate::poly::sign_crossings;
use crate::subsets::{binomial, multiset_count, Combinations, Multisets};
use crate::{Error, Graph, Limits, Placement, Poly, Result};

/// Placements of one size grouped by their expected value polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumReport {
    pub k: usize,
    /// Distinct polynomials in canonical order (constant term, then the
    /// remaining coefficients), each with its members in lexicographic order.
    pub classes: Vec<(Poly, Vec<Placement>)>,
    pub multiset_mode: bool,
}

impl SpectrumReport {
    pub fn placement_count(&self) -> usize {
        self.classes.iter().map(|(_, m)| m.len()).sum()
    }

    /// The class containing `p`, if `p` was enumerated.
    pub fn class_of(&self, p: &Placement) -> Option<&Poly> {
        self.classes
            .iter()
            .find(|(_, members)| members.contains(p))
            .map(|(poly, _)| poly)
    }
}

/// Enumerates every `k`-set (or `k`-multiset) of vertices and groups the
/// placements by `E(G;S,q)`.
pub fn placement_spectrum(
    g: &Graph,
    k: usize,
    multiset_mode: bool,
    limits: &Limits,
) -> Result<SpectrumReport> {
    let n = g.n();
    if k == 0 {
        return Err(Error::param("placement size must be at least 1"));
    }
    if !multiset_mode && k > n {
        return Err(Error::param(
            "set placements cannot exceed the vertex count",
        ));
    }
    let total = if multiset_mode {
        multiset_count(n as u64, k as u64)
    } else {
        binomial(n as u64, k as u64)
    };
    if total > limits.placements {
        return Err(Error::CapExceeded {
            what: "placements to enumerate",
            needed: total,
            cap: limits.placements,
        });
    }
    let placements: Vec<Vec<usize>> = if multiset_mode {
        Multisets::new(n, k).collect()
    } else {
        Combinations::new(n, k).collect()
    };
    let mut classes: BTreeMap<Poly, Vec<Placement>> = BTreeMap::new();
    for vs in placements {
        let p = Placement::from_vertices(vs);
        let e = expected_value_poly(g, &p, limits)?;
        classes.entry(e).or_default().push(p);
    }
    Ok(SpectrumReport {
        k,
        classes: classes.into_iter().collect(),
        multiset_mode,
    })
}

/// Which placement observes more in expectation on an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Leader {
    A,
    B,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub leader: Leader,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub a: Placement,
    pub b: Placement,
    pub poly_a: Poly,
    pub poly_b: Poly,
    /// Sign changes of `E_A - E_B` in `(0, 1)`, each within `tol` of a root.
    pub crossings: Vec<BigRational>,
    /// Consecutive intervals covering `(0, 1)`, split at the crossings.
    pub intervals: Vec<DominanceInterval>,
}

/// Compares `E(G;A,q)` with `E(G;B,q)` over `q` in `(0, 1)`.
pub fn compare_placements(
    g: &Graph,
    a: &Placement,
    b: &Placement,
    tol: &BigRational,
    limits: &Limits,
) -> Result<CompareReport> {
    if tol <= &BigRational::zero() {
        return Err(Error::param("tolerance must be positive"));
    }
    let poly_a = expected_value_poly(g, a, limits)?;
    let poly_b = expected_value_poly(g, b, limits)?;
    let zero = BigRational::zero();
    let one = BigRational::one();
    let crossings = sign_crossings(&poly_a, &poly_b, &zero, &one, tol);

    let diff = &poly_a - &poly_b;
    let two = BigRational::from_integer(BigInt::from(2));
    let mut cuts = Vec::with_capacity(crossings.len() + 2);
    cuts.push(zero);
    cuts.extend(crossings.iter().cloned());
    cuts.push(one);
    let intervals = cuts
        .windows(2)
        .map(|w| {
            let mid = (&w[0] + &w[1]) / &two;
            let leader = match diff.eval(&mid).cmp(&BigRational::zero()) {
                Ordering::Greater => Leader::A,
                Ordering::Less => Leader::B,
                Ordering::Equal => Leader::Equal,
            };
            DominanceInterval {
                lo: w[0].clone(),
                hi: w[1].clone(),
                leader,
            }
        })
        .collect();
    Ok(CompareReport {
        a: a.clone(),
        b: b.clone(),
        poly_a,
        poly_b,
        crossings,
        intervals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, Family};
    use alloc::vec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn fig1_spectrum_has_ten_classes() {
        let g = generators::fixture_fig1();
        let s = placement_spectrum(&g, 2, true, &Limits::default()).unwrap();
        assert_eq!(s.classes.len(), 10);
        assert_eq!(s.placement_count(), 28);
        let best = Poly::from_bernstein(&[(10, 1, 1), (7, 0, 2)]);
        let (poly, members) = s.classes.last().unwrap();
        assert_eq!(poly, &best);
        assert_eq!(members, &vec!["3,4".parse::<Placement>().unwrap()]);
    }

    #[test]
    fn path_singletons_form_one_class() {
        let p4 = generators::named(Family::Path, &[4]).unwrap();
        let s = placement_spectrum(&p4, 1, false, &Limits::default()).unwrap();
        assert_eq!(s.classes.len(), 1);
        assert_eq!(s.classes[0].0, Poly::from_i64s(&[4, -4]));
    }

    #[test]
    fn spectrum_cap() {
        let g = generators::fixture_fig1();
        let lim = Limits {
            placements: 27,
            ..Limits::default()
        };
        assert!(matches!(
            placement_spectrum(&g, 2, true, &lim),
            Err(Error::CapExceeded { needed: 28, .. })
        ));
        assert!(placement_spectrum(&g, 8, false, &Limits::default()).is_err());
    }

    #[test]
    fn fig1_crossing() {
        let g = generators::fixture_fig1();
        let a: Placement = "3*2".parse().unwrap();
        let b: Placement = "1,4".parse().unwrap();
        let r = compare_placements(&g, &a, &b, &rat(1, 1_000_000_000), &Limits::default()).unwrap();
        assert_eq!(r.crossings, vec![rat(2, 5)]);
        let leaders: Vec<Leader> = r.intervals.iter().map(|i| i.leader).collect();
        assert_eq!(leaders, vec![Leader::B, Leader::A]);
    }

    #[test]
    fn identical_placements_are_equal() {
        let g = generators::fixture_fig1();
        let a: Placement = "0,1".parse().unwrap();
        let r = compare_placements(&g, &a, &a, &rat(1, 100), &Limits::default()).unwrap();
        assert!(r.crossings.is_empty());
        assert_eq!(r.intervals.len(), 1);
        assert_eq!(r.intervals[0].leader, Leader::Equal);
    }
}
