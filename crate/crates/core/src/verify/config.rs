use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::Semantics;
use crate::graph::{Family, Graph};
use crate::ops::DerivativeKind;

/// Largest caps a configuration may request.
pub const MAX_PROFILE_ORDER: usize = 40;
pub const MAX_EXTREMAL_SIZE: usize = 36;

/// Inclusive integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub from: usize,
    pub to: usize,
}

impl Span {
    pub const fn new(from: usize, to: usize) -> Self {
        Span { from, to }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.from..=self.to
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomTrees {
    pub count: usize,
    pub min_order: usize,
    pub max_order: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphs {
    pub count: usize,
    pub max_order: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// J-profiles of corpus and family graphs.
    pub profile_max_order: usize,
    /// J-profiles of derived and combined graphs.
    pub operation_max_order: usize,
    /// Edge count for bonding-variable subset search.
    pub extremal_max_size: usize,
    /// Edge count for the per-k bonding comparison.
    pub bonding_table_max_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusConfig {
    pub paths: Span,
    pub cycles: Span,
    pub completes: Span,
    pub stars: Span,
    pub nulls: Span,
    pub random_trees: RandomTrees,
    pub random_graphs: RandomGraphs,
    /// Families (`name:params`) combined pairwise by Cartesian product.
    pub product_factors: Vec<String>,
    pub corona_pairs: Vec<(String, String)>,
    pub join_pairs: Vec<(String, String)>,
    pub derivative_kinds: Vec<DerivativeKind>,
    pub derivative_paths: Span,
    pub derivative_cycles: Span,
    /// `K_n` orders for the `r⁻` closed form.
    pub kn_minus: Span,
    /// `K_n` orders for the `r⁺` closed form.
    pub kn_plus: Span,
    pub semantics: Vec<Semantics>,
    pub repair_graphs: Vec<String>,
    /// Iterated minimum-removal schedule on `K_9`.
    pub k9_example: bool,
    pub caps: Caps,
    /// Attach per-record runtimes (breaks byte-identical reports).
    #[serde(default)]
    pub timings: bool,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        let s = |a: &str, b: &str| (a.to_string(), b.to_string());
        CorpusConfig {
            paths: Span::new(2, 10),
            cycles: Span::new(3, 12),
            completes: Span::new(1, 8),
            stars: Span::new(1, 6),
            nulls: Span::new(0, 7),
            random_trees: RandomTrees {
                count: 20,
                min_order: 3,
                max_order: 12,
                seed: 2017,
            },
            random_graphs: RandomGraphs {
                count: 60,
                max_order: 9,
                edge_probability: 0.45,
                seed: 1729,
            },
            product_factors: ["path:3", "path:4", "cycle:4", "cycle:6", "complete:3", "complete:4"]
                .map(String::from)
                .to_vec(),
            corona_pairs: vec![
                s("complete:3", "path:2"),
                s("complete:4", "cycle:6"),
                s("complete:4", "cycle:3"),
                s("cycle:4", "complete:1"),
                s("complete:1", "path:2"),
                s("complete:1", "cycle:3"),
                s("complete:1", "cycle:6"),
                s("complete:3", "cycle:6"),
                s("path:3", "path:2"),
            ],
            join_pairs: vec![
                s("path:3", "path:4"),
                s("cycle:4", "cycle:6"),
                s("complete:3", "cycle:4"),
                s("cycle:5", "path:3"),
                s("cycle:5", "cycle:7"),
            ],
            derivative_kinds: vec![
                DerivativeKind::Line,
                DerivativeKind::Middle,
                DerivativeKind::Total,
                DerivativeKind::Jump,
                DerivativeKind::Central,
            ],
            derivative_paths: Span::new(2, 9),
            derivative_cycles: Span::new(3, 10),
            kn_minus: Span::new(4, 6),
            kn_plus: Span::new(4, 5),
            semantics: vec![Semantics::Plain, Semantics::ConnectedForKGe2],
            repair_graphs: ["cycle:5", "cycle:7", "complete_bipartite:2,3"]
                .map(String::from)
                .to_vec(),
            k9_example: true,
            caps: Caps {
                profile_max_order: 12,
                operation_max_order: 36,
                extremal_max_size: 21,
                bonding_table_max_size: 12,
            },
            timings: false,
        }
    }
}

impl CorpusConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: CorpusConfig =
            serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Rejects caps beyond the solver bounds and ranges beyond the caps.
    pub fn validate(&self) -> Result<()> {
        let caps = &self.caps;
        if caps.profile_max_order > MAX_PROFILE_ORDER || caps.operation_max_order > 64 {
            return Err(Error::ScaleExceeded(format!(
                "profile caps {}/{} exceed {MAX_PROFILE_ORDER}/64",
                caps.profile_max_order, caps.operation_max_order
            )));
        }
        if caps.extremal_max_size > MAX_EXTREMAL_SIZE
            || caps.bonding_table_max_size > caps.extremal_max_size
        {
            return Err(Error::ScaleExceeded(format!(
                "extremal caps {}/{} exceed {MAX_EXTREMAL_SIZE}",
                caps.extremal_max_size, caps.bonding_table_max_size
            )));
        }
        let order_caps = [
            ("paths", self.paths.to),
            ("cycles", self.cycles.to),
            ("completes", self.completes.to),
            ("stars", self.stars.to + 1),
            ("nulls", self.nulls.to),
            ("random_trees", self.random_trees.max_order),
            ("random_graphs", self.random_graphs.max_order),
        ];
        for (name, order) in order_caps {
            if order > caps.profile_max_order {
                return Err(Error::ScaleExceeded(format!(
                    "{name} reach order {order}, above the profile cap {}",
                    caps.profile_max_order
                )));
            }
        }
        if self.kn_minus.to * (self.kn_minus.to.saturating_sub(1)) / 2 > caps.extremal_max_size
            || self.kn_plus.to * (self.kn_plus.to.saturating_sub(1)) / 2 > caps.extremal_max_size
        {
            return Err(Error::ScaleExceeded(
                "complete-graph bonding ranges exceed the subset-search cap".into(),
            ));
        }
        if self.cycles.from < 3 || self.paths.from < 1 || self.completes.from < 1 || self.stars.from < 1 {
            return Err(Error::Config("family ranges below their minimum order".into()));
        }
        if self.random_trees.min_order < 2 || self.random_trees.min_order > self.random_trees.max_order {
            return Err(Error::Config("random tree orders must satisfy 2 <= min <= max".into()));
        }
        if !(0.0..=1.0).contains(&self.random_graphs.edge_probability) {
            return Err(Error::Config("edge probability must lie in [0, 1]".into()));
        }
        for name in self
            .product_factors
            .iter()
            .chain(self.corona_pairs.iter().flat_map(|(a, b)| [a, b]))
            .chain(self.join_pairs.iter().flat_map(|(a, b)| [a, b]))
            .chain(&self.repair_graphs)
        {
            name.parse::<Family>()?;
        }
        Ok(())
    }

    /// Seeded random trees as families.
    pub fn tree_families(&self) -> Vec<Family> {
        let t = self.random_trees;
        let mut rng = ChaCha8Rng::seed_from_u64(t.seed);
        (0..t.count)
            .map(|_| Family::RandomTree {
                n: rng.gen_range(t.min_order..=t.max_order),
                seed: rng.gen(),
            })
            .collect()
    }

    /// Seeded `G(n, p)` graphs, with `n` uniform in `1..=max_order`.
    pub fn random_corpus(&self) -> Vec<Graph> {
        let r = self.random_graphs;
        random_graphs(r.count, r.max_order, r.edge_probability, r.seed)
    }
}

pub fn random_graphs(count: usize, max_order: usize, prob: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_order.max(1));
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(prob) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges).expect("indices in range")
        })
        .collect()
}
