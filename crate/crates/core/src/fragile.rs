//! Exact quantities of the fragile process, where each PMU fails
//! independently with probability `q` before propagation.
//!
//! Observation only depends on which support vertices keep at least one live
//! PMU, so the enumeration runs over subsets `T` of the distinct support. A
//! vertex with `m` PMUs survives with probability `1 - q^m`, which gives the
//! weight `prod_{v in T} (1 - q^{m_v}) * prod_{v not in T} q^{m_v}` for `T`.
//! Weights only depend on how many vertices of each multiplicity are in `T`,
//! so observation counts are first summed per such signature and each
//! signature's weight polynomial is built once.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::binomial_big;
use crate::propagation::Propagator;
use crate::subsets::Combinations;
use crate::{Error, Graph, Limits, Placement, Poly, Result};

/// Per-signature sums gathered in one pass over the support subsets.
#[derive(Debug, Clone)]
struct Tables {
    /// Distinct multiplicities and how many support vertices carry each.
    classes: Vec<(u32, usize)>,
    /// signature index -> (sum of |Obs(T)|, number of power dominating T)
    sums: BTreeMap<usize, (u64, u64)>,
    /// Fewest PMU removals that leave a non power dominating survivor set.
    min_failing_removals: usize,
}

fn check_placement(g: &Graph, p: &Placement, limits: &Limits) -> Result<()> {
    p.validate(g)?;
    let d = p.entries().count();
    limits.check_support(d)?;
    if d >= 64 {
        return Err(Error::CapExceeded {
            what: "distinct support size for subset masks",
            needed: d as u128,
            cap: 63,
        });
    }
    Ok(())
}

impl Tables {
    fn build(g: &Graph, p: &Placement, limits: &Limits) -> Result<Self> {
        check_placement(g, p, limits)?;
        let support = p.support();
        let mults: Vec<u32> = p.entries().map(|(_, m)| m).collect();
        let mut classes: Vec<(u32, usize)> = Vec::new();
        for &m in &mults {
            match classes.iter_mut().find(|(c, _)| *c == m) {
                Some((_, count)) => *count += 1,
                None => classes.push((m, 1)),
            }
        }
        classes.sort_unstable();
        // mixed-radix weight of one vertex of each class in the signature index
        let mut radix = Vec::with_capacity(classes.len());
        let mut acc = 1usize;
        for &(_, size) in &classes {
            radix.push(acc);
            acc *= size + 1;
        }
        let vertex_weight: Vec<usize> = mults
            .iter()
            .map(|m| radix[classes.iter().position(|(c, _)| c == m).unwrap()])
            .collect();

        let n = g.n();
        let total = p.size();
        let mut prop = Propagator::new(g);
        let mut sums: BTreeMap<usize, (u64, u64)> = BTreeMap::new();
        let mut min_failing_removals = total;
        let d = support.len();
        for mask in 0u64..(1u64 << d) {
            let mut index = 0;
            let mut kept = 0usize;
            for i in 0..d {
                if mask >> i & 1 == 1 {
                    index += vertex_weight[i];
                    kept += mults[i] as usize;
                }
            }
            let observed = prop.run_mask(&support, mask);
            let entry = sums.entry(index).or_insert((0, 0));
            entry.0 += observed as u64;
            if observed == n {
                entry.1 += 1;
            } else {
                min_failing_removals = min_failing_removals.min(total - kept);
            }
        }
        Ok(Tables {
            classes,
            sums,
            min_failing_removals,
        })
    }

    fn signature(&self, mut index: usize) -> Vec<usize> {
        self.classes
            .iter()
            .map(|&(_, size)| {
                let s = index % (size + 1);
                index /= size + 1;
                s
            })
            .collect()
    }

    fn weight(&self, index: usize) -> Poly {
        let sig = self.signature(index);
        let mut w = Poly::one();
        for (&(m, size), &alive) in self.classes.iter().zip(&sig) {
            let m = m as usize;
            w = w * Poly::one_minus_q_to(m).pow(alive as u32) * Poly::q_pow(m * (size - alive));
        }
        w
    }

    fn combine(&self, pick: impl Fn(&(u64, u64)) -> u64) -> Poly {
        self.sums
            .iter()
            .filter(|(_, v)| pick(v) != 0)
            .map(|(&idx, v)| self.weight(idx).scale(&BigInt::from(pick(v))))
            .sum()
    }
}

/// `E(G; P, q)`: the expected number of observed vertices, for a set or
/// multiset placement.
pub fn expected_value_poly(g: &Graph, p: &Placement, limits: &Limits) -> Result<Poly> {
    Ok(Tables::build(g, p, limits)?.combine(|v| v.0))
}

/// Probability that the whole graph ends up observed.
pub fn prob_all_observed_poly(g: &Graph, p: &Placement, limits: &Limits) -> Result<Poly> {
    Ok(Tables::build(g, p, limits)?.combine(|v| v.1))
}

/// Both polynomials from a single enumeration: `(expected, prob_all)`.
pub fn expected_and_prob(g: &Graph, p: &Placement, limits: &Limits) -> Result<(Poly, Poly)> {
    let t = Tables::build(g, p, limits)?;
    Ok((t.combine(|v| v.0), t.combine(|v| v.1)))
}

/// `E(G; S, q)` for a set `S`, assembled coefficient by coefficient: the
/// coefficient of `q^{|S| - r}` is
/// `sum_{W ⊆ S, |W| >= r} (-1)^{|W| - r} C(|W|, r) |Obs(W)|`.
///
/// This is an independent route to [`expected_value_poly`] for
/// cross-checking; it enumerates subsets by size rather than by mask.
pub fn expected_value_coeffs(g: &Graph, p: &Placement, limits: &Limits) -> Result<Poly> {
    if !p.is_set() {
        return Err(Error::param(
            "coefficient route needs a set placement; use expected_value_poly for multisets",
        ));
    }
    check_placement(g, p, limits)?;
    let support = p.support();
    let s = support.len();
    let mut prop = Propagator::new(g);
    let obs_by_size: Vec<BigInt> = (0..=s)
        .map(|w| {
            Combinations::new(s, w)
                .map(|idx| prop.run(idx.iter().map(|&i| support[i])) as u64)
                .sum::<u64>()
                .into()
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); s + 1];
    for r in 0..=s {
        let mut c = BigInt::zero();
        for (w, obs) in obs_by_size.iter().enumerate().skip(r) {
            let term = binomial_big(w, r) * obs;
            if (w - r) % 2 == 0 {
                c += term;
            } else {
                c -= term;
            }
        }
        coeffs[s - r] = c;
    }
    Ok(Poly::from_coeffs(coeffs))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessReport {
    pub is_pds: bool,
    /// Largest `k` for which the placement is a `k`-rPDS, or -1 when it does
    /// not even power dominate.
    pub max_k_rpds: i64,
    /// Same value for set placements, where robustness and fault tolerance
    /// coincide; `None` for multisets.
    pub max_k_fault_tolerant: Option<i64>,
    /// `h(q)` in `E = n - q^{k+1} h(q)`, with `h(0) != 0`.
    pub h_poly: Poly,
    pub expected: Poly,
}

/// Reads the robustness level off the shape `E = n - q^{k+1} h(q)`.
pub fn robustness_from_poly(n: usize, expected: &Poly) -> (i64, Poly) {
    let deficit = Poly::constant(n) - expected;
    let first = deficit
        .lowest_term()
        .expect("E(1) = 0 differs from n for nonempty graphs");
    let h = deficit.unshift(first).expect("lowest terms are zero");
    (first as i64 - 1, h)
}

pub fn robustness_report(g: &Graph, p: &Placement, limits: &Limits) -> Result<RobustnessReport> {
    let expected = expected_value_poly(g, p, limits)?;
    let n = g.n();
    let is_pds = expected.coeff(0) == BigInt::from(n);
    let (max_k_rpds, h_poly) = if is_pds {
        robustness_from_poly(n, &expected)
    } else {
        (-1, Poly::constant(n) - &expected)
    };
    Ok(RobustnessReport {
        is_pds,
        max_k_rpds,
        max_k_fault_tolerant: p.is_set().then_some(max_k_rpds),
        h_poly,
        expected,
    })
}

/// Largest `k` such that removing any `k` PMUs leaves a power dominating
/// set, straight from the definition (-1 if `P` itself fails). Survivor
/// supports are enumerated and the removals needed to reach each one are
/// counted, instead of listing sub-multisets.
pub fn max_k_rpds_direct(g: &Graph, p: &Placement, limits: &Limits) -> Result<i64> {
    let t = Tables::build(g, p, limits)?;
    Ok(t.min_failing_removals as i64 - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaultTolerance {
    /// Largest `k` for which `V(G)` is `k`-fault-tolerant.
    pub k: usize,
    /// Failed power domination number, `n - k - 1`.
    pub gammap_bar: usize,
}

/// Fault tolerance of the whole vertex set, from the shape of `E(G; V(G), q)`.
pub fn max_fault_tolerance(g: &Graph, limits: &Limits) -> Result<FaultTolerance> {
    limits.check_vertices(g.n())?;
    let n = g.n();
    if n == 0 {
        return Err(Error::param("graph has no vertices"));
    }
    let e = expected_value_poly(g, &Placement::from_vertices(0..n), limits)?;
    let (k, _) = robustness_from_poly(n, &e);
    let k = k as usize;
    Ok(FaultTolerance {
        k,
        gammap_bar: n - k - 1,
    })
}

/// Closed-form probability bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    /// Smallest `|S|` with `|S| >= f + log(eps) / log(q)`.
    MinSizeForConfidence {
        f: usize,
        q: BigRational,
        eps: BigRational,
    },
    /// `1 - sum_{i < s-k} C(s, i) q^{s-i} (1-q)^i`, a lower bound on the
    /// full-observation probability of a `k`-rPDS of size `s`.
    RpdsLowerBound { s: usize, k: usize, q: BigRational },
    /// `C(n, n-2) q^2 (1-q)^{n-2} + n q (1-q)^{n-1} + (1-q)^n` for a
    /// connected graph with a PMU on every vertex.
    ConnectedLowerBound { n: usize, q: BigRational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Size(usize),
    Probability(BigRational),
}

fn open_unit(name: &str, x: &BigRational) -> Result<()> {
    if !x.is_positive() || *x >= BigRational::one() {
        return Err(Error::param(alloc::format!(
            "{name} must lie in (0, 1), got {x}"
        )));
    }
    Ok(())
}

pub fn rpds_lower_bound_poly(s: usize, k: usize) -> Result<Poly> {
    if k >= s {
        return Err(Error::param(alloc::format!(
            "robustness k = {k} must be below the placement size s = {s}"
        )));
    }
    let tail: Poly = (0..s - k)
        .map(|i| Poly::bernstein(binomial_big(s, i), s - i, i))
        .sum();
    Ok(Poly::one() - tail)
}

pub fn connected_lower_bound_poly(n: usize) -> Result<Poly> {
    if n < 3 {
        return Err(Error::param("connected lower bound needs n >= 3"));
    }
    Ok(Poly::bernstein(binomial_big(n, n - 2), 2, n - 2)
        + Poly::bernstein(n, 1, n - 1)
        + Poly::bernstein(1, 0, n))
}

pub fn probability_bound(bound: &Bound) -> Result<BoundValue> {
    match bound {
        Bound::MinSizeForConfidence { f, q, eps } => {
            open_unit("q", q)?;
            open_unit("eps", eps)?;
            Ok(BoundValue::Size(f + min_exponent_below(q, eps)))
        }
        Bound::RpdsLowerBound { s, k, q } => {
            open_unit("q", q)?;
            Ok(BoundValue::Probability(
                rpds_lower_bound_poly(*s, *k)?.eval(q),
            ))
        }
        Bound::ConnectedLowerBound { n, q } => {
            open_unit("q", q)?;
            Ok(BoundValue::Probability(
                connected_lower_bound_poly(*n)?.eval(q),
            ))
        }
    }
}

/// Smallest `j >= 1` with `q^j <= eps`, for `q, eps` in `(0, 1)`. Equivalent
/// to `ceil(log eps / log q)` but exact.
fn min_exponent_below(q: &BigRational, eps: &BigRational) -> usize {
    // gallop to an upper bound, then binary search
    let mut hi = 1usize;
    let mut pow = q.clone();
    while pow > *eps {
        pow = &pow * &pow;
        hi *= 2;
    }
    let mut lo = hi / 2;
    while lo + 1 < hi {
        let mid = lo + (hi - lo) / 2;
        if rational_pow(q, mid) <= *eps {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi.max(1)
}

fn rational_pow(x: &BigRational, mut k: usize) -> BigRational {
    let mut base = x.clone();
    let mut acc = BigRational::one();
    while k > 0 {
        if k & 1 == 1 {
            acc = &acc * &base;
        }
        k >>= 1;
        if k > 0 {
            base = &base * &base;
        }
    }
    acc
}
