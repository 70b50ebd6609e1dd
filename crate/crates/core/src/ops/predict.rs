//! Closed-form J / J* predictions for catalogued graph descriptors.
//!
//! Each prediction carries the identifier of the published claim it comes
//! from; the verification harness compares it against the exact solvers.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{combine, derive, CombineKind, DerivativeKind};
use crate::error::Result;
use crate::graph::{generate, Family, Graph};

/// A graph described by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSpec {
    Family(Family),
    Derived {
        kind: DerivativeKind,
        of: Box<GraphSpec>,
    },
    Combined {
        kind: CombineKind,
        left: Box<GraphSpec>,
        right: Box<GraphSpec>,
    },
}

impl GraphSpec {
    pub fn family(f: Family) -> Self {
        GraphSpec::Family(f)
    }

    pub fn derived(kind: DerivativeKind, of: GraphSpec) -> Self {
        GraphSpec::Derived {
            kind,
            of: Box::new(of),
        }
    }

    pub fn combined(kind: CombineKind, left: GraphSpec, right: GraphSpec) -> Self {
        GraphSpec::Combined {
            kind,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(f) => generate(f),
            GraphSpec::Derived { kind, of } => derive(&of.build()?, *kind),
            GraphSpec::Combined { kind, left, right } => {
                combine(&left.build()?, &right.build()?, *kind)
            }
        }
    }

    fn is_k1(&self) -> bool {
        matches!(
            self,
            GraphSpec::Family(
                Family::Complete { n: 1 } | Family::Path { n: 1 } | Family::Null { n: 1 }
            )
        )
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family(fam) => write!(f, "{fam}"),
            GraphSpec::Derived { kind, of } => write!(f, "{kind}({of})"),
            GraphSpec::Combined { kind, left, right } => write!(f, "({left}{kind}{right})"),
        }
    }
}

/// What a claim says about one parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "expect", content = "value")]
pub enum Expect {
    Value(usize),
    Inadmissible,
    /// Admits a colouring; no value stated.
    Admissible,
    /// Either the value or no colouring at all.
    ValueOrInadmissible(usize),
}

impl Expect {
    /// Whether an exact result (`None` = inadmissible) agrees.
    pub fn matches(self, computed: Option<usize>) -> bool {
        match self {
            Expect::Value(v) => computed == Some(v),
            Expect::Inadmissible => computed.is_none(),
            Expect::Admissible => computed.is_some(),
            Expect::ValueOrInadmissible(v) => computed.is_none_or(|c| c == v),
        }
    }

    fn value(self) -> Option<usize> {
        match self {
            Expect::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Value(v) => write!(f, "{v}"),
            Expect::Inadmissible => f.write_str("inadmissible"),
            Expect::Admissible => f.write_str("admissible"),
            Expect::ValueOrInadmissible(v) => write!(f, "{v} or inadmissible"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub claim: &'static str,
    pub j: Option<Expect>,
    pub j_star: Option<Expect>,
}

fn pred(claim: &'static str, j: Option<Expect>, j_star: Option<Expect>) -> Prediction {
    Prediction { claim, j, j_star }
}

/// The first catalogued prediction for `spec`.
pub fn predicted_value(spec: &GraphSpec) -> Option<Prediction> {
    predicted_values(spec).into_iter().next()
}

/// Every catalogued prediction for `spec`; empty when no claim covers it.
pub fn predicted_values(spec: &GraphSpec) -> Vec<Prediction> {
    use DerivativeKind as D;
    use Expect::*;
    let both = |claim, e: Expect| pred(claim, Some(e), Some(e));
    match spec {
        GraphSpec::Family(f) => match *f {
            Family::Null { .. } => vec![both("Conv-null", Value(1))],
            Family::Path { n } if n >= 2 => vec![pred(
                "Fact-path",
                Some(Value(2)),
                (n >= 3).then_some(Value(3)),
            )],
            Family::Cycle { n } => vec![pred("Thm-3.8", Some(cycle_j(n)), None)],
            Family::Complete { n } if n >= 1 => {
                vec![pred("Fact-complete", Some(Value(n)), None)]
            }
            Family::Star { leaves } if leaves >= 1 => vec![pred(
                "Ex-star",
                Some(Value(2)),
                Some(Value(leaves + 1)),
            )],
            Family::RandomTree { n, .. } if n >= 2 => {
                vec![pred("Thm-2.1", Some(Value(2)), None)]
            }
            _ => Vec::new(),
        },
        GraphSpec::Derived { kind, of } => match (**of).clone() {
            GraphSpec::Family(Family::Path { n }) if n >= 2 => match kind {
                D::Line if n >= 3 => vec![pred(
                    "Prop-3.7-i",
                    Some(Value(2)),
                    (n >= 4).then_some(Value(3)),
                )],
                D::Middle if n == 2 => vec![pred("Prop-3.7-ii", Some(Value(2)), None)],
                D::Middle => vec![pred("Prop-3.7-ii", Some(Inadmissible), Some(Value(3)))],
                D::Total => vec![both("Prop-3.7-iii", Value(3))],
                D::Jump if n == 5 => vec![both("Prop-3.7-iv", Value(3))],
                D::Jump if n >= 6 => vec![both("Prop-3.7-iv", Value(n / 2))],
                D::Central => vec![both("Prop-3.7-v", Value(3))],
                _ => Vec::new(),
            },
            GraphSpec::Family(Family::Cycle { n }) => match kind {
                D::Line => vec![both("Prop-3.9-i", cycle_j(n))],
                D::Middle if n % 3 == 0 => vec![both("Prop-3.9-ii", Value(3))],
                D::Middle => vec![both("Prop-3.9-ii", ValueOrInadmissible(3))],
                D::Total if n % 2 == 0 => vec![both("Prop-3.9-iii", Value(4))],
                D::Total => vec![pred("Prop-3.9-iii", Some(Inadmissible), None)],
                D::Jump if n == 5 => vec![pred("Prop-3.9-iv", Some(Inadmissible), None)],
                D::Jump if n >= 6 => vec![both("Prop-3.9-iv", Value(n / 2))],
                D::Central => vec![both("Prop-3.9-v", Value(3))],
                _ => Vec::new(),
            },
            _ => Vec::new(),
        },
        GraphSpec::Combined { kind, left, right } => {
            let jl = factor_j(left);
            let jr = factor_j(right);
            match kind {
                CombineKind::Corona => {
                    let (Some(Value(jg)), Some(Value(jh))) = (jl, jr) else {
                        return Vec::new();
                    };
                    if left.is_k1() {
                        vec![
                            pred("Thm-3.1", Some(Value(jh + 1)), None),
                            pred("Cor-corona", Some(Value(jg)), None),
                        ]
                    } else if jg == jh + 1 {
                        vec![
                            pred("Thm-3.1", Some(Admissible), None),
                            pred("Cor-corona", Some(Value(jg)), None),
                        ]
                    } else {
                        vec![pred("Thm-3.1", Some(Inadmissible), None)]
                    }
                }
                CombineKind::Join => match (jl, jr) {
                    (Some(a), Some(b)) => {
                        let admits = |e: Expect| e.value().is_some() || e == Admissible;
                        let e = if admits(a) && admits(b) {
                            Admissible
                        } else if a == Inadmissible || b == Inadmissible {
                            Inadmissible
                        } else {
                            return Vec::new();
                        };
                        vec![pred("Thm-3.2", Some(e), None)]
                    }
                    _ => Vec::new(),
                },
                CombineKind::Cartesian => match (jl, jr) {
                    (Some(Value(a)), Some(Value(b))) => {
                        vec![pred("Thm-3.3", Some(Value(a.max(b))), None)]
                    }
                    _ => Vec::new(),
                },
                CombineKind::DisjointUnion => Vec::new(),
            }
        }
    }
}

fn cycle_j(n: usize) -> Expect {
    if n.is_multiple_of(3) {
        Expect::Value(3)
    } else if n.is_multiple_of(2) {
        Expect::Value(2)
    } else {
        Expect::Inadmissible
    }
}

fn factor_j(spec: &GraphSpec) -> Option<Expect> {
    if spec.is_k1() {
        return Some(Expect::Value(1));
    }
    predicted_values(spec).into_iter().find_map(|p| p.j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> GraphSpec {
        GraphSpec::family(Family::Path { n })
    }

    fn cycle(n: usize) -> GraphSpec {
        GraphSpec::family(Family::Cycle { n })
    }

    #[test]
    fn cycle_nine() {
        let p = predicted_value(&cycle(9)).unwrap();
        assert_eq!(p.claim, "Thm-3.8");
        assert_eq!(p.j, Some(Expect::Value(3)));
    }

    #[test]
    fn total_of_c6() {
        let p = predicted_value(&GraphSpec::derived(DerivativeKind::Total, cycle(6))).unwrap();
        assert_eq!(p.claim, "Prop-3.9-iii");
        assert_eq!((p.j, p.j_star), (Some(Expect::Value(4)), Some(Expect::Value(4))));
    }

    #[test]
    fn jump_of_p5() {
        let p = predicted_value(&GraphSpec::derived(DerivativeKind::Jump, path(5))).unwrap();
        assert_eq!(p.claim, "Prop-3.7-iv");
        assert_eq!(p.j, Some(Expect::Value(3)));
    }

    #[test]
    fn corona_readings_disagree_at_k1() {
        let spec = GraphSpec::combined(
            CombineKind::Corona,
            GraphSpec::family(Family::Complete { n: 1 }),
            cycle(3),
        );
        let ps = predicted_values(&spec);
        assert_eq!(ps[0].j, Some(Expect::Value(4)));
        assert_eq!(ps[1].claim, "Cor-corona");
        assert_eq!(ps[1].j, Some(Expect::Value(1)));
    }

    #[test]
    fn cartesian_takes_max() {
        let spec = GraphSpec::combined(
            CombineKind::Cartesian,
            path(4),
            GraphSpec::family(Family::Complete { n: 4 }),
        );
        assert_eq!(predicted_value(&spec).unwrap().j, Some(Expect::Value(4)));
    }

    #[test]
    fn uncatalogued_is_none() {
        assert!(predicted_value(&GraphSpec::family(Family::CompleteBipartite { a: 2, b: 3 })).is_none());
        let spec = GraphSpec::derived(DerivativeKind::Complement, path(4));
        assert!(predicted_value(&spec).is_none());
    }

    #[test]
    fn expect_matching() {
        assert!(Expect::Value(3).matches(Some(3)));
        assert!(!Expect::Value(3).matches(None));
        assert!(Expect::ValueOrInadmissible(3).matches(None));
        assert!(!Expect::ValueOrInadmissible(3).matches(Some(2)));
        assert!(Expect::Admissible.matches(Some(7)));
        assert!(Expect::Inadmissible.matches(None));
    }

    #[test]
    fn specs_build() {
        let s = GraphSpec::combined(CombineKind::Cartesian, path(3), cycle(4));
        let g = s.build().unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(s.to_string(), "(P3□C4)");
    }
}
