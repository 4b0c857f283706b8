//! The `sg` text format and matrix output.
//!
//! ```text
//! # comments run to the end of the line
//! sg 4 5 simple
//! 1 2 +
//! 2 3 -
//! 3 4 +
//! 1 4 +
//! 1 3 -
//! eta
//! 1 -1 +1
//! ...
//! ```
//!
//! The header gives the vertex count, edge count and mode (`simple` or
//! `simply-signed`). Edge ids follow line order. The optional `eta` block
//! lists `η(u, e)` and `η(v, e)` for every edge, in the endpoint order of
//! its edge line.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Mode, Orientation, Sign, SignedGraph};
use crate::matrix::IntMatrix;

fn field<T: FromStr>(token: Option<&str>, line: usize, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{token}`")))
}

/// Parse a graph file. Graph errors such as loops are reported with the
/// line of the offending edge.
pub fn read_graph(text: &str) -> Result<(SignedGraph, Option<Orientation>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty file"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("sg") {
        return Err(Error::parse(hline, "header must start with `sg`"));
    }
    let n: usize = field(tok.next(), hline, "vertex count")?;
    let m: usize = field(tok.next(), hline, "edge count")?;
    let mode: Mode = field(tok.next(), hline, "mode")?;
    if tok.next().is_some() {
        return Err(Error::parse(hline, "trailing text after header"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut edge_lines = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| Error::parse(hline, format!("expected {m} edge lines")))?;
        let mut tok = l.split_whitespace();
        let u: usize = field(tok.next(), ln, "vertex")?;
        let v: usize = field(tok.next(), ln, "vertex")?;
        let s: Sign = field(tok.next(), ln, "sign")?;
        if tok.next().is_some() {
            return Err(Error::parse(ln, "trailing text after edge"));
        }
        edges.push((u, v, s));
        edge_lines.push(ln);
    }
    // point graph errors at the offending edge line
    let g = SignedGraph::new(n, mode, edges.iter().copied()).map_err(|e| {
        let at = match &e {
            Error::Parallel { second, .. } => Some(*second),
            Error::Loop(_) | Error::UnknownVertex { .. } => edges
                .iter()
                .position(|&(u, v, _)| u == v || u == 0 || v == 0 || u > n || v > n)
                .map(|i| i + 1),
            _ => None,
        };
        match at {
            Some(k) => Error::parse(edge_lines[k - 1], e),
            None => e,
        }
    })?;

    let Some((eline, marker)) = lines.next() else {
        return Ok((g, None));
    };
    if marker != "eta" {
        return Err(Error::parse(eline, format!("expected `eta` or end of file, got `{marker}`")));
    }
    let mut eta: Vec<Option<(Sign, Sign)>> = vec![None; m];
    for (ln, l) in lines {
        let mut tok = l.split_whitespace();
        let e: EdgeId = field(tok.next(), ln, "edge id")?;
        let a: Sign = field(tok.next(), ln, "edge end sign")?;
        let b: Sign = field(tok.next(), ln, "edge end sign")?;
        if tok.next().is_some() {
            return Err(Error::parse(ln, "trailing text after edge ends"));
        }
        if e == 0 || e > m {
            return Err(Error::parse(ln, format!("edge id {e} out of range")));
        }
        if eta[e - 1].replace((a, b)).is_some() {
            return Err(Error::parse(ln, format!("edge {e} oriented twice")));
        }
    }
    let eta: Vec<(Sign, Sign)> = eta
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::parse(eline, format!("edge {} has no orientation", i + 1))))
        .collect::<Result<_>>()?;
    let o = Orientation::new(&g, eta).map_err(|e| Error::parse(eline, e))?;
    Ok((g, Some(o)))
}

/// The canonical text of a graph, with its orientation if given.
pub fn write_graph(g: &SignedGraph, o: Option<&Orientation>) -> String {
    let mut s = format!("sg {} {} {}\n", g.n(), g.m(), g.mode());
    for e in g.edges() {
        writeln!(s, "{} {} {}", e.u, e.v, e.sign).expect("write to string");
    }
    if let Some(o) = o {
        s.push_str("eta\n");
        for (i, (a, b)) in o.pairs().iter().enumerate() {
            writeln!(s, "{} {:+} {:+}", i + 1, a.value(), b.value()).expect("write to string");
        }
    }
    s
}

/// A switching function file: `n` signs separated by white space.
pub fn read_switching(text: &str) -> Result<Vec<Sign>> {
    let mut out = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let l = l.split('#').next().unwrap_or("");
        for t in l.split_whitespace() {
            out.push(field(Some(t), i + 1, "sign")?);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixFormat {
    /// Rows of space-separated integers.
    Plain,
    Csv,
}

pub fn write_matrix(m: &IntMatrix, format: MatrixFormat) -> String {
    let sep = match format {
        MatrixFormat::Plain => " ",
        MatrixFormat::Csv => ",",
    };
    let mut s = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
        s.push_str(&row.join(sep));
        s.push('\n');
    }
    s
}
