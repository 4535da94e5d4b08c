//! Graph families and fixed constructions.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use crate::propagation::Propagator;
use crate::{Error, Graph, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// `S_n = K_{1,n-1}`, centre at index 0.
    Star,
    /// `W_n`: hub at index 0 joined to the cycle on `1..n`.
    Wheel,
    /// Parts occupy consecutive index ranges.
    CompleteMultipartite,
    /// Takes `n` and yields the complement of `C_{n+2}`.
    CycleComplement,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::Star,
        Family::Wheel,
        Family::CompleteMultipartite,
        Family::CycleComplement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::CompleteMultipartite => "complete-multipartite",
            Family::CycleComplement => "cycle-complement",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Ok(match key.as_str() {
            "path" | "p" => Family::Path,
            "cycle" | "c" => Family::Cycle,
            "complete" | "k" => Family::Complete,
            "star" | "s" => Family::Star,
            "wheel" | "w" => Family::Wheel,
            "complete-multipartite" | "multipartite" => Family::CompleteMultipartite,
            "cycle-complement" | "complement-cycle" => Family::CycleComplement,
            _ => return Err(Error::param(format!("unknown graph family {s:?}"))),
        })
    }
}

fn single(family: Family, params: &[usize]) -> Result<usize> {
    match params {
        [n] => Ok(*n),
        _ => Err(Error::param(format!(
            "{family} takes exactly one size parameter, got {}",
            params.len()
        ))),
    }
}

fn at_least(family: Family, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::param(format!("{family} needs n >= {min}, got {n}")));
    }
    Ok(())
}

fn cycle_edges(vertices: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    let k = vertices.len();
    (0..k).map(move |i| (vertices[i], vertices[(i + 1) % k]))
}

/// Textbook graph families. See [`Family`] for index conventions.
pub fn named(family: Family, params: &[usize]) -> Result<Graph> {
    match family {
        Family::Path => {
            let n = single(family, params)?;
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle => {
            let n = single(family, params)?;
            at_least(family, n, 3)?;
            let vs: Vec<usize> = (0..n).collect();
            Graph::from_edges(n, cycle_edges(&vs))
        }
        Family::Complete => {
            let n = single(family, params)?;
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::Star => {
            let n = single(family, params)?;
            at_least(family, n, 2)?;
            Graph::from_edges(n, (1..n).map(|v| (0, v)))
        }
        Family::Wheel => {
            let n = single(family, params)?;
            at_least(family, n, 4)?;
            let rim: Vec<usize> = (1..n).collect();
            Graph::from_edges(n, (1..n).map(|v| (0, v)).chain(cycle_edges(&rim)))
        }
        Family::CompleteMultipartite => {
            if params.is_empty() || params.contains(&0) {
                return Err(Error::param(
                    "complete multipartite graph needs at least one part, each of size >= 1",
                ));
            }
            let mut part_of = Vec::new();
            for (i, &r) in params.iter().enumerate() {
                part_of.extend(core::iter::repeat_n(i, r));
            }
            let n = part_of.len();
            let part_of = &part_of;
            Graph::from_edges(
                n,
                (0..n).flat_map(|u| {
                    (u + 1..n)
                        .filter(move |&v| part_of[u] != part_of[v])
                        .map(move |v| (u, v))
                }),
            )
        }
        Family::CycleComplement => {
            let n = single(family, params)?;
            at_least(family, n, 1)?;
            Ok(named(Family::Cycle, &[n + 2])?.complement())
        }
    }
}

/// `B(G1, x1, G2, x2, m)`: `G1` on indices `0..l`, `G2` on `l..l+n`, and the
/// `m` internal vertices of the `x1`-`x2` path on `l+n..l+n+m`, in order from
/// `x1` towards `x2`.
pub fn generalized_barbell(
    g1: &Graph,
    x1: usize,
    g2: &Graph,
    x2: usize,
    m: usize,
) -> Result<Graph> {
    g1.check_vertex(x1)?;
    g2.check_vertex(x2)?;
    let l = g1.n();
    let total = l + g2.n() + m;
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    edges.extend(g2.edges().map(|(u, v)| (u + l, v + l)));
    let mut chain = vec![x1];
    chain.extend(l + g2.n()..total);
    chain.push(x2 + l);
    edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    Graph::from_edges(total, edges)
}

/// An edge at an apex of the linear construction that may be subdivided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ApexEdge {
    /// Edge to the `j`-th vertex of the apex's part.
    Part(usize),
    /// Edge to one of the apex's two pendant leaves (0 or 1).
    Leaf(usize),
}

/// Subdivision counts keyed by `(part index, edge)`.
pub type Subdivisions = BTreeMap<(usize, ApexEdge), usize>;

/// Complete multipartite graph `K_{r_1..r_k}` where each part gains an apex
/// adjacent to the whole part, and each apex gains two pendant leaves; any
/// apex edge can be subdivided. Returns the graph and the apexes, which form
/// a placement whose expected observation count is exactly linear in `q`.
///
/// Layout: the multipartite vertices first, then for each part its apex and
/// two leaves, then subdivision vertices.
pub fn linear_construct(
    parts: &[usize],
    subdivisions: &Subdivisions,
) -> Result<(Graph, Vec<usize>)> {
    if parts.len() < 2 {
        return Err(Error::param("linear construction needs at least two parts"));
    }
    if let Some(r) = parts.iter().find(|&&r| r < 2) {
        return Err(Error::param(format!("part size {r} is below 2")));
    }
    for &(part, edge) in subdivisions.keys() {
        let ok = part < parts.len()
            && match edge {
                ApexEdge::Part(j) => j < parts[part],
                ApexEdge::Leaf(j) => j < 2,
            };
        if !ok {
            return Err(Error::param(format!(
                "subdivision target {edge:?} of part {part} does not exist"
            )));
        }
    }
    let base = named(Family::CompleteMultipartite, parts)?;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut next = base.n();
    let mut apexes = Vec::with_capacity(parts.len());
    let mut part_start = 0;
    let mut pending = Vec::new();
    for (i, &r) in parts.iter().enumerate() {
        let apex = next;
        let leaves = [next + 1, next + 2];
        next += 3;
        apexes.push(apex);
        for j in 0..r {
            pending.push((
                apex,
                part_start + j,
                subdivisions.get(&(i, ApexEdge::Part(j))),
            ));
        }
        for (j, &leaf) in leaves.iter().enumerate() {
            pending.push((apex, leaf, subdivisions.get(&(i, ApexEdge::Leaf(j)))));
        }
        part_start += r;
    }
    for (apex, far, times) in pending {
        let times = times.copied().unwrap_or(0);
        let mut prev = apex;
        for _ in 0..times {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, far));
    }
    Ok((Graph::from_edges(next, edges)?, apexes))
}

/// Output of [`crossing_family`].
#[derive(Debug, Clone)]
pub struct CrossingFamily {
    pub graph: Graph,
    /// A power dominating pair.
    pub s: [usize; 2],
    /// A failed power dominating pair.
    pub f: [usize; 2],
}

/// A graph `G_{a,b}` on `10 + a + b` vertices with a power dominating pair
/// `S = {s0, s1}` and a failed pair `F = {f0, f1}` such that
///
/// * `|Obs(S)| = 10 + a + b` and `|Obs({s0})| + |Obs({s1})| = 12 + a`,
/// * `|Obs(F)| = |Obs({f0})| + |Obs({f1})| = 6 + b`, with
///   `Obs({f0}) ∪ Obs({f1}) = Obs(F)`.
///
/// The two expected value polynomials then differ by
/// `(q - 1)((b - 2) q - (a + 4))` and cross at `q = (a + 4) / (b - 2)`.
///
/// Base graph on indices 0..10, with `f0 = 0`, `s0 = 1`, `s1 = 2`, `f1 = 7`:
///
/// ```text
/// 0-1 0-2 1-3 1-4 1-6 1-9 2-3 2-5 3-4 3-7 7-8
/// ```
///
/// The edge 2-3 is subdivided `a` times and 7-8 is subdivided `b` times.
/// The counts above are re-checked with the propagation engine before the
/// graph is returned.
pub fn crossing_family(a: usize, b: usize) -> Result<CrossingFamily> {
    if a < 1 || b < 3 {
        return Err(Error::param(format!(
            "crossing family needs a >= 1 and b >= 3, got a = {a}, b = {b}"
        )));
    }
    const BASE: [(usize, usize); 9] = [
        (0, 1),
        (0, 2),
        (1, 3),
        (1, 4),
        (1, 6),
        (1, 9),
        (2, 5),
        (3, 4),
        (3, 7),
    ];
    let n = 10 + a + b;
    let mut edges: Vec<(usize, usize)> = BASE.to_vec();
    let mut next = 10;
    for (from, to, times) in [(2, 3, a), (7, 8, b)] {
        let mut prev = from;
        for _ in 0..times {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, to));
    }
    let graph = Graph::from_edges(n, edges)?;
    let fam = CrossingFamily {
        graph,
        s: [1, 2],
        f: [0, 7],
    };
    certify_crossing(&fam, a, b)?;
    Ok(fam)
}

fn certify_crossing(fam: &CrossingFamily, a: usize, b: usize) -> Result<()> {
    let mut p = Propagator::new(&fam.graph);
    let n = fam.graph.n();
    let full_s = p.run(fam.s);
    let s0 = p.run([fam.s[0]]);
    let s1 = p.run([fam.s[1]]);
    let f0 = p.run([fam.f[0]]);
    let f0_set = p.result().observed;
    let f1 = p.run([fam.f[1]]);
    let f1_set = p.result().observed;
    let full_f = p.run(fam.f);
    let f_set = p.result().observed;
    let mut union: Vec<usize> = f0_set.into_iter().chain(f1_set).collect();
    union.sort_unstable();
    union.dedup();
    let ok = n == 10 + a + b
        && full_s == n
        && s0 + s1 == 12 + a
        && full_f == 6 + b
        && f0 + f1 == 6 + b
        && union == f_set;
    if ok {
        Ok(())
    } else {
        Err(Error::param(format!(
            "crossing family construction failed certification for a = {a}, b = {b}"
        )))
    }
}

/// The 7-vertex example graph, in 1-based labels: hub edge 4-5, vertex 1 on
/// a triangle with both, leaves 2, 3 on vertex 4 and 6, 7 on vertex 5.
/// Indices are the labels minus one.
pub fn fixture_fig1() -> Graph {
    Graph::from_edges(7, [(0, 3), (0, 4), (3, 4), (1, 3), (2, 3), (4, 5), (4, 6)])
        .and_then(|g| g.with_labels((1..=7).map(|i| i.to_string()).collect()))
        .expect("fixture is well formed")
}
