//! Unary graph derivatives and binary graph operations.
//!
//! Vertex numbering is fixed: original vertices keep their indices and come
//! first, edge-vertices follow in sorted edge order. Binary operations put
//! the left operand's vertices first.

mod predict;

pub use predict::{predicted_value, predicted_values, Expect, GraphSpec, Prediction};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivativeKind {
    Complement,
    Line,
    Jump,
    Middle,
    Total,
    Central,
    Subdivision,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CombineKind {
    DisjointUnion,
    Join,
    Corona,
    Cartesian,
}

impl DerivativeKind {
    pub const ALL: [DerivativeKind; 7] = [
        DerivativeKind::Complement,
        DerivativeKind::Line,
        DerivativeKind::Jump,
        DerivativeKind::Middle,
        DerivativeKind::Total,
        DerivativeKind::Central,
        DerivativeKind::Subdivision,
    ];

    fn symbol(self) -> &'static str {
        match self {
            DerivativeKind::Complement => "co",
            DerivativeKind::Line => "L",
            DerivativeKind::Jump => "Jump",
            DerivativeKind::Middle => "M",
            DerivativeKind::Total => "T",
            DerivativeKind::Central => "Cen",
            DerivativeKind::Subdivision => "S",
        }
    }
}

impl fmt::Display for DerivativeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for DerivativeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complement" => DerivativeKind::Complement,
            "line" => DerivativeKind::Line,
            "jump" => DerivativeKind::Jump,
            "middle" => DerivativeKind::Middle,
            "total" => DerivativeKind::Total,
            "central" => DerivativeKind::Central,
            "subdivision" => DerivativeKind::Subdivision,
            other => return Err(Error::Config(format!("unknown derivative {other:?}"))),
        })
    }
}

impl CombineKind {
    fn symbol(self) -> &'static str {
        match self {
            CombineKind::DisjointUnion => "∪",
            CombineKind::Join => "+",
            CombineKind::Corona => "∘",
            CombineKind::Cartesian => "□",
        }
    }
}

impl fmt::Display for CombineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for CombineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "disjoint_union" | "union" => CombineKind::DisjointUnion,
            "join" => CombineKind::Join,
            "corona" => CombineKind::Corona,
            "cartesian" => CombineKind::Cartesian,
            other => return Err(Error::Config(format!("unknown combination {other:?}"))),
        })
    }
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    Ok(())
}

pub fn derive(g: &Graph, kind: DerivativeKind) -> Result<Graph> {
    let n = g.order();
    let edges = g.edges();
    let p = edges.len();
    let needs_edge = |op| {
        if p == 0 {
            Err(Error::Precondition {
                op,
                requirement: "at least one edge".into(),
            })
        } else {
            Ok(())
        }
    };
    // Edge-to-edge adjacency, shared by line, jump, middle and total.
    let edge_adjacent = |i: usize, j: usize| {
        let (a, b) = edges[i];
        let (c, d) = edges[j];
        a == c || a == d || b == c || b == d
    };
    let line_pairs = || {
        (0..p).flat_map(move |i| {
            (i + 1..p)
                .filter(move |&j| edge_adjacent(i, j))
                .map(move |j| (i, j))
        })
    };
    let incidence = |offset: usize| {
        edges
            .iter()
            .enumerate()
            .flat_map(move |(i, &(a, b))| [(a, offset + i), (b, offset + i)])
    };
    match kind {
        DerivativeKind::Complement => Ok(g.complement()),
        DerivativeKind::Line => {
            needs_edge("line graph")?;
            check_order(p)?;
            Graph::new(p, line_pairs())
        }
        DerivativeKind::Jump => {
            needs_edge("jump graph")?;
            if n < 3 {
                return Err(Error::Precondition {
                    op: "jump graph",
                    requirement: "order at least 3".into(),
                });
            }
            check_order(p)?;
            Ok(Graph::new(p, line_pairs())?.complement())
        }
        DerivativeKind::Subdivision => {
            check_order(n + p)?;
            Graph::new(n + p, incidence(n))
        }
        DerivativeKind::Middle => {
            check_order(n + p)?;
            let ee = line_pairs().map(|(i, j)| (n + i, n + j));
            Graph::new(n + p, incidence(n).chain(ee))
        }
        DerivativeKind::Total => {
            check_order(n + p)?;
            let ee = line_pairs().map(|(i, j)| (n + i, n + j));
            Graph::new(n + p, edges.iter().copied().chain(incidence(n)).chain(ee))
        }
        DerivativeKind::Central => {
            check_order(n + p)?;
            let co = g.complement().edges();
            Graph::new(n + p, incidence(n).chain(co))
        }
    }
}

pub fn combine(g: &Graph, h: &Graph, kind: CombineKind) -> Result<Graph> {
    let (ng, nh) = (g.order(), h.order());
    match kind {
        CombineKind::DisjointUnion | CombineKind::Join => {
            check_order(ng + nh)?;
            let mut adj: Vec<VertexSet> = Vec::with_capacity(ng + nh);
            let right = VertexSet::full(ng + nh).difference(VertexSet::full(ng));
            for v in 0..ng {
                let mut s = g.neighbours(v);
                if kind == CombineKind::Join {
                    s = s.union(right);
                }
                adj.push(s);
            }
            for u in 0..nh {
                let mut s = VertexSet(h.neighbours(u).0 << ng);
                if kind == CombineKind::Join {
                    s = s.union(VertexSet::full(ng));
                }
                adj.push(s);
            }
            Ok(Graph::from_adjacency(adj))
        }
        CombineKind::Corona => {
            if ng == 0 || nh == 0 {
                return Err(Error::Precondition {
                    op: "corona",
                    requirement: "both operands nonempty".into(),
                });
            }
            let order = ng + ng * nh;
            check_order(order)?;
            let mut edges = g.edges();
            for v in 0..ng {
                let base = ng + v * nh;
                edges.extend((0..nh).map(|u| (v, base + u)));
                edges.extend(h.edges().into_iter().map(|(a, b)| (base + a, base + b)));
            }
            Graph::new(order, edges)
        }
        CombineKind::Cartesian => {
            let order = ng * nh;
            check_order(order)?;
            let id = |v: usize, u: usize| v * nh + u;
            let mut edges = Vec::new();
            for v in 0..ng {
                for (a, b) in h.edges() {
                    edges.push((id(v, a), id(v, b)));
                }
            }
            for u in 0..nh {
                for (a, b) in g.edges() {
                    edges.push((id(a, u), id(b, u)));
                }
            }
            Graph::new(order, edges)
        }
    }
}
