//! Text formats: a line-oriented edge list and graph6.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFormat {
    /// `n m` header, then one `u v` line per edge with `u < v`.
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge_list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::Config(format!("unknown graph format {other:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => write_edge_list(g),
        GraphFormat::Graph6 => write_graph6(g),
    }
}

fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedHeader("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parsed: Vec<usize> = fields.iter().filter_map(|f| f.parse().ok()).collect();
    if fields.len() != 2 || parsed.len() != 2 {
        return Err(Error::MalformedHeader(format!(
            "expected \"n m\", got {header:?}"
        )));
    }
    let (n, m) = (parsed[0], parsed[1]);
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let line_no = idx + 1;
        let bad = |detail: String| Error::MalformedEdge {
            line: line_no,
            detail,
        };
        let nums: Vec<&str> = line.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(bad(format!("expected \"u v\", got {line:?}")));
        }
        let u: usize = nums[0]
            .parse()
            .map_err(|_| bad(format!("not an index: {:?}", nums[0])))?;
        let v: usize = nums[1]
            .parse()
            .map_err(|_| bad(format!("not an index: {:?}", nums[1])))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, edges)
}

fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

fn graph6_value(c: char) -> Result<u8> {
    match c as u32 {
        63..=126 => Ok(c as u8 - 63),
        _ => Err(Error::InvalidGraph6Char(c)),
    }
}

fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let chars: Vec<char> = body.chars().collect();
    let first = *chars.first().ok_or(Error::TruncatedGraph6 {
        expected: 1,
        found: 0,
    })?;
    let (n, start) = if first == '~' {
        if chars.get(1) == Some(&'~') {
            return Err(Error::OrderTooLarge {
                order: 258_048,
                max: MAX_ORDER,
            });
        }
        if chars.len() < 4 {
            return Err(Error::TruncatedGraph6 {
                expected: 4,
                found: chars.len(),
            });
        }
        let mut n = 0usize;
        for &c in &chars[1..4] {
            n = n << 6 | graph6_value(c)? as usize;
        }
        (n, 4)
    } else {
        (graph6_value(first)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let payload = &chars[start..];
    if payload.len() != need {
        return Err(Error::TruncatedGraph6 {
            expected: need,
            found: payload.len(),
        });
    }
    let values: Vec<u8> = payload
        .iter()
        .map(|&c| graph6_value(c))
        .collect::<Result<_>>()?;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if values[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}
