//! The deterministic power domination process and the parameters derived
//! from it.
//!
//! The closure is computed with a worklist. Each vertex keeps a count of its
//! unobserved neighbours; an observed vertex whose count drops to one is
//! queued, and when popped it forces its last unobserved neighbour. The
//! forcing rule is monotone, so the fixed point does not depend on the order
//! in which queued vertices are processed.

use alloc::vec;
use alloc::vec::Vec;

use crate::subsets::Combinations;
use crate::{Error, Graph, Limits, Result};

/// Outcome of one run of the process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObservationResult {
    /// Observed vertices, ascending.
    pub observed: Vec<usize>,
    pub fully_observed: bool,
    /// Number of zero forcing steps performed.
    pub rounds: usize,
}

impl ObservationResult {
    pub fn len(&self) -> usize {
        self.observed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.observed.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.observed.binary_search(&v).is_ok()
    }
}

/// Reusable propagation state for one graph. Enumeration loops should keep
/// one of these around instead of calling [`observed_set`] repeatedly.
#[derive(Debug, Clone)]
pub struct Propagator<'g> {
    g: &'g Graph,
    observed: Vec<bool>,
    unobserved_nbrs: Vec<u32>,
    queue: Vec<usize>,
    count: usize,
    rounds: usize,
}

impl<'g> Propagator<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Propagator {
            g,
            observed: vec![false; g.n()],
            unobserved_nbrs: vec![0; g.n()],
            queue: Vec::with_capacity(g.n()),
            count: 0,
            rounds: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    fn reset(&mut self) {
        self.observed.fill(false);
        for (v, c) in self.unobserved_nbrs.iter_mut().enumerate() {
            *c = self.g.degree(v) as u32;
        }
        self.queue.clear();
        self.count = 0;
        self.rounds = 0;
    }

    fn observe(&mut self, u: usize) {
        if self.observed[u] {
            return;
        }
        self.observed[u] = true;
        self.count += 1;
        self.queue.push(u);
        for &w in self.g.neighbors(u) {
            self.unobserved_nbrs[w] -= 1;
            if self.observed[w] && self.unobserved_nbrs[w] == 1 {
                self.queue.push(w);
            }
        }
    }

    /// Runs the process from `seeds` (repeats allowed, indices must be in
    /// range) and returns the number of observed vertices.
    pub fn run<I: IntoIterator<Item = usize>>(&mut self, seeds: I) -> usize {
        self.reset();
        let g = self.g;
        for s in seeds {
            self.observe(s);
            for &w in g.neighbors(s) {
                self.observe(w);
            }
        }
        while let Some(v) = self.queue.pop() {
            if self.unobserved_nbrs[v] != 1 {
                continue;
            }
            let u = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| !self.observed[u])
                .expect("counter says one unobserved neighbour remains");
            self.rounds += 1;
            self.observe(u);
        }
        self.count
    }

    /// Runs from the members of `support` selected by the bits of `mask`.
    pub fn run_mask(&mut self, support: &[usize], mask: u64) -> usize {
        self.run(
            support
                .iter()
                .enumerate()
                .filter(move |(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        )
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn is_observed(&self, v: usize) -> bool {
        self.observed[v]
    }

    pub fn result(&self) -> ObservationResult {
        ObservationResult {
            observed: (0..self.g.n()).filter(|&v| self.observed[v]).collect(),
            fully_observed: self.count == self.g.n(),
            rounds: self.rounds,
        }
    }
}

/// `Obs(G; support)`. An empty support observes nothing.
pub fn observed_set(g: &Graph, support: &[usize]) -> Result<ObservationResult> {
    for &v in support {
        g.check_vertex(v)?;
    }
    let mut p = Propagator::new(g);
    p.run(support.iter().copied());
    Ok(p.result())
}

pub fn is_power_dominating(g: &Graph, support: &[usize]) -> Result<bool> {
    for &v in support {
        g.check_vertex(v)?;
    }
    Ok(Propagator::new(g).run(support.iter().copied()) == g.n())
}

fn check_subset_search(g: &Graph, limits: &Limits) -> Result<()> {
    limits.check_vertices(g.n())?;
    if g.n() >= 64 {
        return Err(Error::CapExceeded {
            what: "vertex count for subset masks",
            needed: g.n() as u128,
            cap: 63,
        });
    }
    Ok(())
}

/// Minimum size of a power dominating set, searching sizes in ascending order.
pub fn power_domination_number(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_vertices(g.n())?;
    let n = g.n();
    let mut p = Propagator::new(g);
    for k in 0..=n {
        for combo in Combinations::new(n, k) {
            if p.run(combo.iter().copied()) == n {
                return Ok(k);
            }
        }
    }
    unreachable!("the full vertex set always power dominates")
}

/// Largest size of a vertex set that fails to observe the whole graph. The
/// empty set never power dominates a nonempty graph, so the answer is 0 when
/// every nonempty set succeeds. Sizes are searched in descending order.
pub fn failed_power_domination_number(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_vertices(g.n())?;
    let n = g.n();
    let mut p = Propagator::new(g);
    for k in (1..=n).rev() {
        for combo in Combinations::new(n, k) {
            if p.run(combo.iter().copied()) < n {
                return Ok(k);
            }
        }
    }
    Ok(0)
}

/// `p(G;i)` for `i = 1..=n`: the number of power dominating sets of each size.
pub fn power_domination_polynomial(g: &Graph, limits: &Limits) -> Result<Vec<u64>> {
    check_subset_search(g, limits)?;
    let n = g.n();
    let all: Vec<usize> = (0..n).collect();
    let mut p = Propagator::new(g);
    let mut counts = vec![0u64; n + 1];
    for mask in 1u64..(1u64 << n) {
        if p.run_mask(&all, mask) == n {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts.remove(0);
    Ok(counts)
}

/// Whether every vertex of `Obs(G; support)` is observed by some single
/// member of `support` acting alone.
pub fn is_local_cover(g: &Graph, support: &[usize]) -> Result<bool> {
    if support.is_empty() {
        return Err(Error::param("local cover check needs a nonempty set"));
    }
    for &v in support {
        g.check_vertex(v)?;
    }
    let mut p = Propagator::new(g);
    let mut covered = vec![false; g.n()];
    for &v in support {
        p.run([v]);
        for (u, c) in covered.iter_mut().enumerate() {
            *c |= p.is_observed(u);
        }
    }
    p.run(support.iter().copied());
    Ok((0..g.n()).all(|u| !p.is_observed(u) || covered[u]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{self, Family};

    fn path(n: usize) -> Graph {
        generators::named(Family::Path, &[n]).unwrap()
    }

    #[test]
    fn middle_of_p3_observes_everything() {
        let r = observed_set(&path(3), &[1]).unwrap();
        assert!(r.fully_observed);
        assert_eq!(r.rounds, 0);
    }

    #[test]
    fn path_endpoint_forces_down() {
        let r = observed_set(&path(6), &[0]).unwrap();
        assert!(r.fully_observed);
        assert_eq!(r.rounds, 4);
    }

    #[test]
    fn empty_support_observes_nothing() {
        let r = observed_set(&path(4), &[]).unwrap();
        assert!(r.is_empty());
        assert!(!r.fully_observed);
    }

    #[test]
    fn out_of_range_vertex() {
        assert!(observed_set(&path(3), &[3]).is_err());
        assert!(is_power_dominating(&path(3), &[7]).is_err());
    }

    #[test]
    fn fig1_observations() {
        let g = generators::fixture_fig1();
        // labels are one more than indices
        let r = observed_set(&g, &[0]).unwrap();
        assert_eq!(r.observed, vec![0, 3, 4]);
        assert!(!r.fully_observed);
        assert_eq!(observed_set(&g, &[3]).unwrap().len(), 5);
        assert_eq!(observed_set(&g, &[1]).unwrap().len(), 2);
        assert!(observed_set(&g, &[1, 4]).unwrap().fully_observed);
        assert!(!is_power_dominating(&g, &[1, 2]).unwrap());
        assert_eq!(observed_set(&g, &[1, 2]).unwrap().len(), 3);
    }

    #[test]
    fn classical_parameters() {
        let lim = Limits::default();
        let g = generators::fixture_fig1();
        assert_eq!(power_domination_number(&g, &lim).unwrap(), 2);
        assert_eq!(failed_power_domination_number(&g, &lim).unwrap(), 4);
        for n in 1..8 {
            assert_eq!(power_domination_number(&path(n), &lim).unwrap(), 1);
        }
        let k33 = generators::named(Family::CompleteMultipartite, &[3, 3]).unwrap();
        assert_eq!(power_domination_number(&k33, &lim).unwrap(), 2);
        for n in 3..9 {
            let c = generators::named(Family::Cycle, &[n]).unwrap();
            assert_eq!(failed_power_domination_number(&c, &lim).unwrap(), 0);
        }
    }

    #[test]
    fn pd_polynomial_of_k3() {
        let k3 = generators::named(Family::Complete, &[3]).unwrap();
        assert_eq!(
            power_domination_polynomial(&k3, &Limits::default()).unwrap(),
            vec![3, 3, 1]
        );
    }

    #[test]
    fn caps_are_errors() {
        let g = path(21);
        let err = power_domination_number(&g, &Limits::default()).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 20, .. }));
        assert_eq!(
            power_domination_number(&g, &Limits::with_cap(21)).unwrap(),
            1
        );
    }

    #[test]
    fn local_covers() {
        let star = generators::named(Family::Star, &[6]).unwrap();
        assert!(is_local_cover(&star, &[0]).unwrap());
        let g = generators::fixture_fig1();
        assert!(is_local_cover(&g, &[3, 4]).unwrap());
        assert!(is_local_cover(&g, &[1, 2]).unwrap());
        assert!(is_local_cover(&g, &[]).is_err());
    }
}
