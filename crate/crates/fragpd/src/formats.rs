//! Graph file formats: a plain edge list and graph6.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! 3 2      <- n m
//! 0 1
//! 1 2
//! ```
//!
//! Exactly `m` edge lines must follow the header. Repeated edges are merged.

use std::fmt::Write as _;

use fragpd_core::Graph;

use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize)> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("{what} {tok:?} is not a nonnegative integer")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(Error::parse(line, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "empty input, expected \"n m\" header"))?;
    let (n, m) = parse_pair(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (line, s) in lines {
        if edges.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the {m} declared edges"),
            ));
        }
        let (u, v) = parse_pair(line, s)?;
        if u >= n || v >= n {
            return Err(Error::parse(
                line,
                format!("edge {u} {v} has an endpoint outside 0..{n}"),
            ));
        }
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
        last = line;
    }
    if edges.len() < m {
        return Err(Error::parse(
            last,
            format!("header declares {m} edges but only {} follow", edges.len()),
        ));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn g6_byte(line: usize, c: u8) -> Result<u8> {
    if (63..=126).contains(&c) {
        Ok(c - 63)
    } else {
        Err(Error::parse(
            line,
            format!("invalid graph6 character {:?}", c as char),
        ))
    }
}

fn parse_g6_at(line: usize, s: &str) -> Result<Graph> {
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let truncated = || Error::parse(line, "truncated graph6 size field");
    let (n, rest) = match bytes {
        [126, 126, tail @ ..] => {
            let head = tail.get(..6).ok_or_else(truncated)?;
            (big_endian6(line, head)?, &tail[6..])
        }
        [126, tail @ ..] => {
            let head = tail.get(..3).ok_or_else(truncated)?;
            (big_endian6(line, head)?, &tail[3..])
        }
        [c, tail @ ..] => (g6_byte(line, *c)? as usize, tail),
        [] => return Err(Error::parse(line, "empty graph6 string")),
    };
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .ok_or_else(|| Error::parse(line, format!("graph6 size {n} is too large")))?
        / 2;
    let need = bits.div_ceil(6);
    if rest.len() != need {
        return Err(Error::parse(
            line,
            format!(
                "graph6 body for {n} vertices needs {need} characters, found {}",
                rest.len()
            ),
        ));
    }
    let mut data = Vec::with_capacity(need);
    for &c in rest {
        data.push(g6_byte(line, c)?);
    }
    let bit = |k: usize| data[k / 6] >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..need * 6).any(bit) {
        return Err(Error::parse(line, "nonzero graph6 padding bits"));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn big_endian6(line: usize, chunk: &[u8]) -> Result<usize> {
    chunk
        .iter()
        .try_fold(0usize, |acc, &c| Ok(acc << 6 | g6_byte(line, c)? as usize))
}

/// Parses one graph6 string, with or without the `>>graph6<<` header.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    parse_g6_at(1, s.trim())
}

/// Parses a file holding one graph6 string per line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    content_lines(text)
        .map(|(line, s)| parse_g6_at(line, s))
        .collect()
}

fn push_size(out: &mut String, n: usize) {
    let push6 = |out: &mut String, v: usize| out.push((v as u8 + 63) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift & 63);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift & 63);
        }
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Reads a graph from either format. A first content line of two integers
/// means an edge list; anything else is taken as a single graph6 string.
pub fn parse_graph_auto(text: &str) -> Result<Graph> {
    let Some((line, first)) = content_lines(text).next() else {
        return Err(Error::parse(1, "no graph in input"));
    };
    let mut toks = first.split_whitespace();
    let looks_like_header = matches!(
        (toks.next(), toks.next(), toks.next()),
        (Some(a), Some(b), None) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok()
    );
    if looks_like_header {
        return parse_edge_list(text);
    }
    let graphs = parse_graph6_lines(text)?;
    match graphs.len() {
        1 => Ok(graphs.into_iter().next().unwrap()),
        k => Err(Error::parse(
            line,
            format!("expected one graph6 line, found {k}"),
        )),
    }
}
