use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Graph, Result};

/// A multiset of vertices: where the PMUs sit, with multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    entries: BTreeMap<usize, u32>,
}

impl Placement {
    pub fn new() -> Self {
        Self::default()
    }

    /// One PMU on each listed vertex; repeats add multiplicity.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut p = Placement::new();
        for v in vertices {
            p.add(v, 1);
        }
        p
    }

    pub fn add(&mut self, v: usize, copies: u32) {
        if copies > 0 {
            *self.entries.entry(v).or_insert(0) += copies;
        }
    }

    pub fn with(mut self, v: usize, copies: u32) -> Self {
        self.add(v, copies);
        self
    }

    /// Total number of PMUs.
    pub fn size(&self) -> usize {
        self.entries.values().map(|&m| m as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, v: usize) -> u32 {
        self.entries.get(&v).copied().unwrap_or(0)
    }

    /// Distinct vertices carrying at least one PMU, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.entries.keys().copied().collect()
    }

    /// `(vertex, multiplicity)` pairs, ascending by vertex.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.entries.iter().map(|(&v, &m)| (v, m))
    }

    pub fn is_set(&self) -> bool {
        self.entries.values().all(|&m| m == 1)
    }

    /// Rejects empty placements and vertices outside the graph.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.is_empty() {
            return Err(Error::param("placement is empty"));
        }
        for &v in self.entries.keys() {
            g.check_vertex(v)?;
        }
        Ok(())
    }

    /// Vertices listed with repetition, ascending.
    pub fn to_vec(&self) -> Vec<usize> {
        self.entries
            .iter()
            .flat_map(|(&v, &m)| core::iter::repeat_n(v, m as usize))
            .collect()
    }
}

impl fmt::Display for Placement {
    /// Comma-separated `v` or `v*m` tokens.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, m)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Placement {
    type Err = Error;

    /// Parses `"v[*m],..."`. Whitespace around tokens is ignored and a
    /// vertex named twice accumulates multiplicity.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Placement::new();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            let (v, m) = match token.split_once('*') {
                Some((v, m)) => (v.trim(), m.trim()),
                None => (token, "1"),
            };
            let v: usize = v
                .parse()
                .map_err(|_| Error::param(format!("bad vertex in placement token {token:?}")))?;
            let m: u32 = m.parse().map_err(|_| {
                Error::param(format!("bad multiplicity in placement token {token:?}"))
            })?;
            if m == 0 {
                return Err(Error::param(format!("zero multiplicity in {token:?}")));
            }
            p.add(v, m);
        }
        if p.is_empty() {
            return Err(Error::param(String::from("placement has no vertices")));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn parse_and_display() {
        let p: Placement = "3*2, 1 ,3".parse().unwrap();
        assert_eq!(p.multiplicity(3), 3);
        assert_eq!(p.size(), 4);
        assert_eq!(p.to_string(), "1,3*3");
        assert_eq!(p.to_vec(), vec![1, 3, 3, 3]);
        assert!(!p.is_set());
    }

    #[test]
    fn parse_errors() {
        assert!("".parse::<Placement>().is_err());
        assert!("a".parse::<Placement>().is_err());
        assert!("1*0".parse::<Placement>().is_err());
        assert!("1*x".parse::<Placement>().is_err());
    }

    #[test]
    fn validate_range() {
        let g = Graph::empty(3);
        assert!(Placement::from_vertices([0, 2]).validate(&g).is_ok());
        assert!(Placement::from_vertices([3]).validate(&g).is_err());
        assert!(Placement::new().validate(&g).is_err());
    }
}
