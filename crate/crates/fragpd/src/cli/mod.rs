//! Command-line front end. [`run`] returns the text to print so the binary
//! and the tests share one code path.

mod args;

use std::fmt::Write as _;
use std::path::Path;

use fragpd_core::analysis::{compare_placements, placement_spectrum, Leader};
use fragpd_core::closed_forms::{
    barbell_expected, multipartite_expected, star_expected, star_prob_full,
};
use fragpd_core::fragile::{
    expected_value_poly, prob_all_observed_poly, probability_bound, robustness_report, Bound,
    BoundValue,
};
use fragpd_core::generators::{self, Family, Subdivisions};
use fragpd_core::propagation::{
    failed_power_domination_number, observed_set, power_domination_number,
    power_domination_polynomial,
};
use fragpd_core::{BigRational, Graph, Limits, Placement, Poly};
use serde_json::{json, Value};

pub use args::{BoundCmd, Cli, ClosedFormCmd, Command, Global, GraphFormat};

use crate::error::{Error, Result};
use crate::formats::{parse_graph_auto, write_edge_list, write_graph6};
use crate::montecarlo::simulate;
use crate::rational::{
    format_decimal, parse_probability, parse_rational, parse_rational_list, to_f64,
};
use crate::sweep::{sweep, to_csv, uniform_grid, SimColumns};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Json,
    Csv,
}

struct Ctx<'a> {
    global: &'a Global,
    style: Style,
    limits: Limits,
}

impl Ctx<'_> {
    fn graph(&self) -> Result<Graph> {
        let path = self
            .global
            .graph
            .as_deref()
            .ok_or_else(|| Error::param("this command needs --graph FILE"))?;
        read_graph(path)
    }

    fn placement(&self, g: &Graph) -> Result<Placement> {
        let s = self
            .global
            .placement
            .as_deref()
            .ok_or_else(|| Error::param("this command needs --placement LIST"))?;
        parse_placement(s, g)
    }

    fn dec(&self, x: &BigRational) -> String {
        format_decimal(x, self.global.precision)
    }

    fn no_csv(&self, what: &str) -> Result<()> {
        if self.style == Style::Csv {
            return Err(Error::param(format!("{what} has no CSV output")));
        }
        Ok(())
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_graph_auto(&text)
}

fn parse_placement(s: &str, g: &Graph) -> Result<Placement> {
    let p: Placement = s.parse()?;
    p.validate(g)?;
    Ok(p)
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::param(format!("{s:?} is not a nonnegative integer")))
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(parse_usize)
        .collect()
}

/// `family:p1,p2` as used for barbell ends, e.g. `wheel:5` or `complete:1`.
fn parse_graph_spec(s: &str) -> Result<Graph> {
    let (family, params) = s.split_once(':').unwrap_or((s, ""));
    let family: Family = family.parse()?;
    Ok(generators::named(family, &parse_usize_list(params)?)?)
}

fn poly_json(p: &Poly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

fn rational_json(ctx: &Ctx, x: &BigRational) -> Value {
    json!({ "exact": x.to_string(), "decimal": ctx.dec(x) })
}

fn render(ctx: &Ctx, value: Value, text: impl FnOnce() -> String) -> Result<String> {
    Ok(match ctx.style {
        Style::Json => serde_json::to_string_pretty(&value)? + "\n",
        _ => text(),
    })
}

pub fn run(cli: &Cli) -> Result<String> {
    let global = &cli.global;
    let style = if global.json {
        Style::Json
    } else if global.csv {
        Style::Csv
    } else {
        Style::Text
    };
    let limits = global.cap.map(Limits::with_cap).unwrap_or_default();
    let ctx = Ctx {
        global,
        style,
        limits,
    };
    match &cli.command {
        Command::Gen {
            family,
            params,
            format,
        } => cmd_gen(family, params, *format),
        Command::Obs => cmd_obs(&ctx),
        Command::Gammap | Command::Gammapbar | Command::Pdpoly => cmd_classical(&ctx, &cli.command),
        Command::Expoly { at } => cmd_poly(&ctx, at.as_deref(), false),
        Command::Probfull { at } => cmd_poly(&ctx, at.as_deref(), true),
        Command::Robust => cmd_robust(&ctx),
        Command::Bounds { bound } => cmd_bounds(&ctx, bound),
        Command::ClosedForm { verify, family } => cmd_closed_form(&ctx, family, *verify),
        Command::Sim { q, trials } => cmd_sim(&ctx, q, *trials),
        Command::Spectrum { k, multisets } => cmd_spectrum(&ctx, *k, *multisets),
        Command::Compare { a, b } => cmd_compare(&ctx, a, b),
        Command::Sweep {
            grid,
            steps,
            sim_trials,
        } => cmd_sweep(&ctx, grid.as_deref(), *steps, *sim_trials),
    }
}

fn cmd_gen(family: &str, params: &[String], format: GraphFormat) -> Result<String> {
    let nums = || -> Result<Vec<usize>> { params.iter().map(|s| parse_usize(s)).collect() };
    let g = match family.to_ascii_lowercase().as_str() {
        "fig1" => generators::fixture_fig1(),
        "crossing" => match nums()?.as_slice() {
            [a, b] => generators::crossing_family(*a, *b)?.graph,
            _ => return Err(Error::param("crossing takes two parameters: A B")),
        },
        "linear" => generators::linear_construct(&nums()?, &Subdivisions::new())?.0,
        "barbell" => match params {
            [g1, g2, m] => {
                let (g1, g2) = (parse_graph_spec(g1)?, parse_graph_spec(g2)?);
                generators::generalized_barbell(&g1, 0, &g2, 0, parse_usize(m)?)?
            }
            _ => {
                return Err(Error::param(
                    "barbell takes G1 G2 M, e.g. wheel:5 complete:1 2",
                ))
            }
        },
        other => generators::named(other.parse()?, &nums()?)?,
    };
    Ok(match format {
        GraphFormat::Edges => write_edge_list(&g),
        GraphFormat::Graph6 => write_graph6(&g) + "\n",
    })
}

fn cmd_obs(ctx: &Ctx) -> Result<String> {
    ctx.no_csv("obs")?;
    let g = ctx.graph()?;
    let p = ctx.placement(&g)?;
    let r = observed_set(&g, &p.support())?;
    let value = json!({ "observed": r.observed, "full": r.fully_observed, "rounds": r.rounds });
    render(ctx, value, || {
        let list: Vec<String> = r.observed.iter().map(|v| v.to_string()).collect();
        format!(
            "observed: {}\nfull: {}\nrounds: {}\n",
            list.join(","),
            r.fully_observed,
            r.rounds
        )
    })
}

fn cmd_classical(ctx: &Ctx, which: &Command) -> Result<String> {
    ctx.no_csv("this command")?;
    let g = ctx.graph()?;
    let (key, value): (&str, Value) = match which {
        Command::Gammap => ("gammap", power_domination_number(&g, &ctx.limits)?.into()),
        Command::Gammapbar => (
            "gammapbar",
            failed_power_domination_number(&g, &ctx.limits)?.into(),
        ),
        _ => (
            "counts",
            power_domination_polynomial(&g, &ctx.limits)?.into(),
        ),
    };
    let text = match &value {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{} {c}\n", i + 1))
            .collect(),
        v => format!("{v}\n"),
    };
    render(ctx, json!({ key: value }), || text)
}

fn cmd_poly(ctx: &Ctx, at: Option<&str>, prob: bool) -> Result<String> {
    let g = ctx.graph()?;
    let p = ctx.placement(&g)?;
    let poly = if prob {
        prob_all_observed_poly(&g, &p, &ctx.limits)?
    } else {
        expected_value_poly(&g, &p, &ctx.limits)?
    };
    let points = at.map(parse_rational_list).transpose()?.unwrap_or_default();
    let values: Vec<(BigRational, BigRational)> = points
        .into_iter()
        .map(|q| {
            let v = poly.eval(&q);
            (q, v)
        })
        .collect();
    match ctx.style {
        Style::Csv => {
            let mut out = String::from("q,value\n");
            for (q, v) in &values {
                let _ = writeln!(out, "{},{}", ctx.dec(q), ctx.dec(v));
            }
            Ok(out)
        }
        _ => {
            let value = json!({
                "placement": p.to_string(),
                "poly": poly_json(&poly),
                "values": values.iter().map(|(q, v)| json!({
                    "q": rational_json(ctx, q),
                    "value": rational_json(ctx, v),
                })).collect::<Vec<_>>(),
            });
            render(ctx, value, || {
                let mut out = format!("{poly}\n");
                for (q, v) in &values {
                    let _ = writeln!(out, "q = {}: {} ({v})", ctx.dec(q), ctx.dec(v));
                }
                out
            })
        }
    }
}

fn cmd_robust(ctx: &Ctx) -> Result<String> {
    ctx.no_csv("robust")?;
    let g = ctx.graph()?;
    let p = ctx.placement(&g)?;
    let r = robustness_report(&g, &p, &ctx.limits)?;
    let value = json!({
        "is_pds": r.is_pds,
        "max_k_rpds": r.max_k_rpds,
        "max_k_fault_tolerant": r.max_k_fault_tolerant,
        "h_poly": poly_json(&r.h_poly),
        "expected": poly_json(&r.expected),
    });
    render(ctx, value, || {
        let mut out = format!(
            "power dominating: {}\nmax k (PMU-defect robust): {}\n",
            r.is_pds, r.max_k_rpds
        );
        if let Some(k) = r.max_k_fault_tolerant {
            let _ = writeln!(out, "max k (fault tolerant): {k}");
        }
        let _ = writeln!(out, "E = {}\nh = {}", r.expected, r.h_poly);
        out
    })
}

fn cmd_bounds(ctx: &Ctx, cmd: &BoundCmd) -> Result<String> {
    ctx.no_csv("bounds")?;
    let (name, bound) = match cmd {
        BoundCmd::MinSize { f, q, eps } => (
            "min_size_for_confidence",
            Bound::MinSizeForConfidence {
                f: *f,
                q: parse_rational(q)?,
                eps: parse_rational(eps)?,
            },
        ),
        BoundCmd::Rpds { s, k, q } => (
            "rpds_lower_bound",
            Bound::RpdsLowerBound {
                s: *s,
                k: *k,
                q: parse_rational(q)?,
            },
        ),
        BoundCmd::Connected { n, q } => (
            "connected_lower_bound",
            Bound::ConnectedLowerBound {
                n: *n,
                q: parse_rational(q)?,
            },
        ),
    };
    let (value, text) = match probability_bound(&bound)? {
        BoundValue::Size(s) => (json!(s), format!("{s}\n")),
        BoundValue::Probability(p) => (rational_json(ctx, &p), format!("{} ({p})\n", ctx.dec(&p))),
    };
    render(ctx, json!({ "bound": name, "value": value }), || text)
}

fn check_against(label: &str, formula: &Poly, enumerated: &Poly) -> Result<Value> {
    if formula != enumerated {
        return Err(Error::param(format!(
            "{label}: closed form {formula} differs from enumeration {enumerated}"
        )));
    }
    Ok(json!(true))
}

fn cmd_closed_form(ctx: &Ctx, cmd: &ClosedFormCmd, verify: bool) -> Result<String> {
    ctx.no_csv("closed-form")?;
    let mut checked = Value::Null;
    let (expected, prob) = match cmd {
        ClosedFormCmd::Star { n, s, center } => {
            let e = star_expected(*n, *s, *center)?;
            let pf = star_prob_full(*n, *s, *center)?;
            if verify {
                let g = generators::named(Family::Star, &[*n])?;
                let first = usize::from(!*center);
                let p = Placement::from_vertices(first..first + s);
                check_against(
                    "expected value",
                    &e,
                    &expected_value_poly(&g, &p, &ctx.limits)?,
                )?;
                checked = check_against(
                    "full observation",
                    &pf,
                    &prob_all_observed_poly(&g, &p, &ctx.limits)?,
                )?;
            }
            (e, Some(pf))
        }
        ClosedFormCmd::Multipartite { parts, counts } => {
            let (parts, counts) = (parse_usize_list(parts)?, parse_usize_list(counts)?);
            let e = multipartite_expected(&parts, &counts)?;
            if verify {
                let g = generators::named(Family::CompleteMultipartite, &parts)?;
                let mut start = 0;
                let mut p = Placement::new();
                for (&r, &l) in parts.iter().zip(&counts) {
                    (start..start + l).for_each(|v| p.add(v, 1));
                    start += r;
                }
                checked = check_against(
                    "expected value",
                    &e,
                    &expected_value_poly(&g, &p, &ctx.limits)?,
                )?;
            }
            (e, None)
        }
        ClosedFormCmd::Barbell {
            left,
            right,
            m,
            r,
            s,
            t,
        } => {
            let (g1, g2) = (parse_graph_spec(left)?, parse_graph_spec(right)?);
            let (l, n) = (g1.n(), g2.n());
            let e = barbell_expected(l, n, *m, *r, *s, *t)?;
            if verify {
                let g = generators::generalized_barbell(&g1, 0, &g2, 0, *m)?;
                let p = Placement::from_vertices((0..*r).chain(l..l + t).chain(l + n..l + n + s));
                checked = check_against(
                    "expected value",
                    &e,
                    &expected_value_poly(&g, &p, &ctx.limits)?,
                )?;
            }
            (e, None)
        }
    };
    let value = json!({
        "expected": poly_json(&expected),
        "prob_full": prob.as_ref().map(poly_json),
        "verified": checked,
    });
    render(ctx, value, || {
        let mut out = format!("E = {expected}\n");
        if let Some(pf) = &prob {
            let _ = writeln!(out, "Prob = {pf}");
        }
        if verify {
            out.push_str("matches enumeration\n");
        }
        out
    })
}

fn cmd_sim(ctx: &Ctx, q: &str, trials: u64) -> Result<String> {
    ctx.no_csv("sim")?;
    let g = ctx.graph()?;
    let p = ctx.placement(&g)?;
    let q = parse_probability(q)?;
    let est = simulate(&g, &p, to_f64(&q), trials, ctx.global.seed)?;
    let mut value = serde_json::to_value(&est)?;
    value["q"] = json!(q.to_string());
    render(ctx, value, || {
        format!(
            "mean observed: {:.d$}\nstd error: {:.d$}\nfull observation frequency: {:.d$}\ntrials: {}\nseed: {}\n",
            est.mean_observed,
            est.std_error,
            est.full_obs_frequency,
            est.trials,
            est.seed,
            d = ctx.global.precision as usize
        )
    })
}

fn cmd_spectrum(ctx: &Ctx, k: usize, multisets: bool) -> Result<String> {
    ctx.no_csv("spectrum")?;
    let g = ctx.graph()?;
    let report = placement_spectrum(&g, k, multisets, &ctx.limits)?;
    let members = |ps: &[Placement]| ps.iter().map(|p| format!("{{{p}}}")).collect::<Vec<_>>();
    let value = json!({
        "k": report.k,
        "multiset_mode": report.multiset_mode,
        "classes": report.classes.iter().map(|(poly, ps)| json!({
            "poly": poly_json(poly),
            "members": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    render(ctx, value, || {
        let mut out = String::new();
        for (poly, ps) in &report.classes {
            let _ = writeln!(out, "{poly}: {}", members(ps).join(" "));
        }
        out
    })
}

fn leader_name(l: Leader) -> &'static str {
    match l {
        Leader::A => "A",
        Leader::B => "B",
        Leader::Equal => "equal",
    }
}

fn cmd_compare(ctx: &Ctx, a: &str, b: &str) -> Result<String> {
    ctx.no_csv("compare")?;
    let g = ctx.graph()?;
    let (pa, pb) = (parse_placement(a, &g)?, parse_placement(b, &g)?);
    let tol = parse_rational(&ctx.global.tol)?;
    let r = compare_placements(&g, &pa, &pb, &tol, &ctx.limits)?;
    let value = json!({
        "a": r.a.to_string(),
        "b": r.b.to_string(),
        "poly_a": poly_json(&r.poly_a),
        "poly_b": poly_json(&r.poly_b),
        "crossings": r.crossings.iter().map(|x| rational_json(ctx, x)).collect::<Vec<_>>(),
        "intervals": r.intervals.iter().map(|i| json!({
            "lo": rational_json(ctx, &i.lo),
            "hi": rational_json(ctx, &i.hi),
            "leader": leader_name(i.leader),
        })).collect::<Vec<_>>(),
    });
    render(ctx, value, || {
        let mut out = format!(
            "A = {{{}}}: {}\nB = {{{}}}: {}\n",
            r.a, r.poly_a, r.b, r.poly_b
        );
        for x in &r.crossings {
            let _ = writeln!(out, "crossing at {} ({x})", ctx.dec(x));
        }
        for i in &r.intervals {
            let _ = writeln!(
                out,
                "({}, {}): {}",
                ctx.dec(&i.lo),
                ctx.dec(&i.hi),
                leader_name(i.leader)
            );
        }
        out
    })
}

fn cmd_sweep(ctx: &Ctx, grid: Option<&str>, steps: u32, sim_trials: Option<u64>) -> Result<String> {
    let g = ctx.graph()?;
    let p = ctx.placement(&g)?;
    let grid = match grid {
        Some(s) => parse_rational_list(s)?,
        None => uniform_grid(steps),
    };
    let sim = sim_trials.map(|trials| SimColumns {
        trials,
        seed: ctx.global.seed,
    });
    let rows = sweep(&g, &p, &grid, sim, &ctx.limits)?;
    if ctx.style != Style::Json {
        return Ok(to_csv(&rows, ctx.global.precision));
    }
    let value: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "q": rational_json(ctx, &r.q),
                "expected": rational_json(ctx, &r.expected),
                "prob_full": rational_json(ctx, &r.prob_full),
                "sim": r.sim,
            })
        })
        .collect();
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}
