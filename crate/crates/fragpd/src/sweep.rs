//! Tables of exact (and optionally simulated) values over a grid of `q`.

use std::fmt::Write as _;

use fragpd_core::fragile::expected_and_prob;
use fragpd_core::{BigRational, Graph, Limits, Placement};
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::montecarlo::{simulate, SimEstimate};
use crate::rational::{format_decimal, to_f64};

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub q: BigRational,
    pub expected: BigRational,
    pub prob_full: BigRational,
    pub sim: Option<SimEstimate>,
}

/// Simulation settings for the optional sampled columns.
#[derive(Debug, Clone, Copy)]
pub struct SimColumns {
    pub trials: u64,
    pub seed: u64,
}

pub fn sweep(
    g: &Graph,
    p: &Placement,
    grid: &[BigRational],
    sim: Option<SimColumns>,
    limits: &Limits,
) -> Result<Vec<SweepRow>> {
    if let Some(q) = grid
        .iter()
        .find(|q| q.is_negative() || **q > BigRational::one())
    {
        return Err(Error::param(format!("grid point {q} is outside [0, 1]")));
    }
    let (e, prob) = expected_and_prob(g, p, limits)?;
    grid.iter()
        .map(|q| {
            let sim = sim
                .map(|s| simulate(g, p, to_f64(q), s.trials, s.seed))
                .transpose()?;
            Ok(SweepRow {
                q: q.clone(),
                expected: e.eval(q),
                prob_full: prob.eval(q),
                sim,
            })
        })
        .collect()
}

/// `q,expected,prob_full[,sim_mean,sim_stderr]` with `digits` decimal places.
/// Exact columns are rounded from the rational values.
pub fn to_csv(rows: &[SweepRow], digits: u32) -> String {
    let with_sim = rows.iter().any(|r| r.sim.is_some());
    let mut out = String::from("q,expected,prob_full");
    if with_sim {
        out.push_str(",sim_mean,sim_stderr");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{},{},{}",
            format_decimal(&r.q, digits),
            format_decimal(&r.expected, digits),
            format_decimal(&r.prob_full, digits)
        );
        if let Some(s) = &r.sim {
            let d = digits as usize;
            let _ = write!(out, ",{:.d$},{:.d$}", s.mean_observed, s.std_error);
        } else if with_sim {
            out.push_str(",,");
        }
        out.push('\n');
    }
    out
}

/// `steps + 1` evenly spaced points from 0 to 1.
pub fn uniform_grid(steps: u32) -> Vec<BigRational> {
    let steps = steps.max(1);
    (0..=steps)
        .map(|i| BigRational::new(i.into(), steps.into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use fragpd_core::generators::{self, Family};

    #[test]
    fn fig1_first_row() {
        let g = generators::fixture_fig1();
        let p: Placement = "3,4".parse().unwrap();
        let rows = sweep(&g, &p, &uniform_grid(10), None, &Limits::default()).unwrap();
        let csv = to_csv(&rows, 4);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("q,expected,prob_full"));
        assert_eq!(lines.next(), Some("0.0000,7.0000,1.0000"));
        assert_eq!(lines.last(), Some("1.0000,0.0000,0.0000"));
    }

    #[test]
    fn k33_probability() {
        let g = generators::named(Family::CompleteMultipartite, &[3, 3]).unwrap();
        let p: Placement = "0,1".parse().unwrap();
        let grid = [BigRational::new(1.into(), 10.into())];
        let rows = sweep(&g, &p, &grid, None, &Limits::default()).unwrap();
        assert_eq!(rows[0].prob_full, BigRational::new(81.into(), 100.into()));
        assert!(to_csv(&rows, 2).ends_with(",0.81\n"));
    }

    #[test]
    fn precision_does_not_change_values() {
        let g = generators::fixture_fig1();
        let p: Placement = "1,4".parse().unwrap();
        let rows = sweep(&g, &p, &uniform_grid(7), None, &Limits::default()).unwrap();
        let again = sweep(&g, &p, &uniform_grid(7), None, &Limits::default()).unwrap();
        assert_ne!(to_csv(&rows, 2), to_csv(&rows, 9));
        assert!(rows
            .iter()
            .zip(&again)
            .all(|(a, b)| a.expected == b.expected));
    }

    #[test]
    fn grid_outside_unit_interval() {
        let g = generators::fixture_fig1();
        let p: Placement = "0".parse().unwrap();
        let grid = [BigRational::new(3.into(), 2.into())];
        assert!(sweep(&g, &p, &grid, None, &Limits::default()).is_err());
    }

    #[test]
    fn simulated_columns() {
        let g = generators::fixture_fig1();
        let p: Placement = "3,4".parse().unwrap();
        let sim = SimColumns {
            trials: 200,
            seed: 3,
        };
        let rows = sweep(&g, &p, &uniform_grid(2), Some(sim), &Limits::default()).unwrap();
        let csv = to_csv(&rows, 3);
        assert!(csv.starts_with("q,expected,prob_full,sim_mean,sim_stderr\n"));
        assert_eq!(csv.lines().count(), 4);
    }
}
