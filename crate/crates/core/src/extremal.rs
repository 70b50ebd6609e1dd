//! Rainbow bonding variables: the fewest and the most edges whose removal
//! leaves a graph with J equal to a target, found by exact subset search.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::rainbow::{j_value_unchecked, Limits, Mode};

/// Whether the graph left after removal must stay connected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Semantics {
    /// J of a disconnected remainder is taken over all its vertices.
    Plain,
    /// For targets `k >= 2` the remainder must be connected.
    ConnectedForKGe2,
}

impl std::str::FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Semantics::Plain),
            "connected" | "connected_for_k_ge_2" => Ok(Semantics::ConnectedForKGe2),
            other => Err(Error::Config(format!("unknown semantics {other:?}"))),
        }
    }
}

impl std::fmt::Display for Semantics {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Semantics::Plain => "plain",
            Semantics::ConnectedForKGe2 => "connected_for_k_ge_2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalLimits {
    /// Largest edge count for subset search.
    pub max_size: usize,
    pub profile: Limits,
}

impl Default for ExtremalLimits {
    fn default() -> Self {
        ExtremalLimits {
            max_size: 21,
            profile: Limits::default(),
        }
    }
}

impl ExtremalLimits {
    fn check(&self, g: &Graph) -> Result<()> {
        if g.size() > self.max_size {
            return Err(Error::ScaleExceeded(format!(
                "{} edges exceeds the subset-search cap of {}",
                g.size(),
                self.max_size
            )));
        }
        if g.order() > self.profile.max_order {
            return Err(Error::ScaleExceeded(format!(
                "order {} exceeds the profile cap of {}",
                g.order(),
                self.profile.max_order
            )));
        }
        Ok(())
    }
}

/// One extremal removal count with its lexicographically least witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Extremum {
    pub count: usize,
    pub witness: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BondingResult {
    pub k: usize,
    pub semantics: Semantics,
    pub r_minus: Option<Extremum>,
    pub r_plus: Option<Extremum>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Direction {
    Fewest,
    Most,
}

/// Whether `h` has J exactly `k` under `semantics`.
pub fn has_j_exactly(h: &Graph, k: usize, semantics: Semantics) -> bool {
    if k == 1 {
        return h.is_edgeless();
    }
    if h.is_edgeless() || h.min_degree() + 1 < k {
        return false;
    }
    if k == 2 && !h.is_bipartite() {
        return false;
    }
    if semantics == Semantics::ConnectedForKGe2 && !h.is_connected() {
        return false;
    }
    j_value_unchecked(h, Mode::AllVertices) == Some(k)
}

fn admits(h: &Graph) -> bool {
    if h.is_edgeless() {
        return true;
    }
    if h.min_degree() == 0 {
        return false;
    }
    j_value_unchecked(h, Mode::AllVertices).is_some()
}

/// Removal sizes that can leave J exactly `k`: `k = 1` needs every edge
/// gone, `k >= 2` needs `δ >= k - 1` (and a spanning tree when connected).
fn removal_window(g: &Graph, k: usize, semantics: Semantics) -> RangeInclusive<usize> {
    let (n, p) = (g.order(), g.size());
    if k <= 1 {
        return p..=p;
    }
    let mut hi = p.saturating_sub((n * (k - 1)).div_ceil(2)).min(p.saturating_sub(1));
    if semantics == Semantics::ConnectedForKGe2 {
        hi = hi.min((p + 1).saturating_sub(n));
    }
    0..=hi
}

/// Removal sets of each size in `window`, in lexicographic order of edge
/// indices, until `accept` holds. Sizes are visited increasing or decreasing.
fn subset_search<F>(g: &Graph, dir: Direction, window: RangeInclusive<usize>, accept: F) -> Option<Extremum>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let edges = g.edges();
    let p = edges.len();
    let window = *window.start()..=(*window.end()).min(p);
    let sizes: Box<dyn Iterator<Item = usize>> = match dir {
        Direction::Fewest => Box::new(window),
        Direction::Most => Box::new(window.rev()),
    };
    for s in sizes {
        let hit = if s == 0 {
            accept(g).then(Vec::new)
        } else {
            // Split on the leading index; the lowest leader with a hit holds
            // the lexicographically least witness.
            (0..=p - s)
                .into_par_iter()
                .map(|lead| first_with_lead(g, &edges, s, lead, &accept))
                .find_first(|r| r.is_some())
                .flatten()
        };
        if let Some(idx) = hit {
            return Some(Extremum {
                count: s,
                witness: idx.into_iter().map(|i| edges[i]).collect(),
            });
        }
    }
    None
}

fn search_k(g: &Graph, k: usize, semantics: Semantics, dir: Direction) -> Option<Extremum> {
    subset_search(g, dir, removal_window(g, k, semantics), |h| has_j_exactly(h, k, semantics))
}

fn first_with_lead<F>(g: &Graph, edges: &[Edge], s: usize, lead: usize, accept: &F) -> Option<Vec<usize>>
where
    F: Fn(&Graph) -> bool,
{
    let p = edges.len();
    let mut idx: Vec<usize> = (0..s).map(|i| lead + i).collect();
    loop {
        let removed: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
        if accept(&g.without_edges(&removed)) {
            return Some(idx);
        }
        // Next combination with the same leader.
        let mut i = s;
        loop {
            if i == 1 {
                return None;
            }
            i -= 1;
            if idx[i] < p - (s - i) {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..s {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn target_range(g: &Graph, k: usize, limits: &ExtremalLimits) -> Result<Option<usize>> {
    limits.check(g)?;
    let Some(j) = j_value_unchecked(g, Mode::AllVertices) else {
        return Ok(None);
    };
    if k < 1 || k > j {
        return Err(Error::KOutOfRange { k, lo: 1, hi: j });
    }
    Ok(Some(j))
}

/// `r⁻_k(G)`; `None` when `G` admits no J-colouring or no removal set
/// qualifies.
pub fn r_minus(g: &Graph, k: usize, semantics: Semantics) -> Result<Option<Extremum>> {
    r_minus_with(g, k, semantics, &ExtremalLimits::default())
}

pub fn r_minus_with(
    g: &Graph,
    k: usize,
    semantics: Semantics,
    limits: &ExtremalLimits,
) -> Result<Option<Extremum>> {
    if target_range(g, k, limits)?.is_none() {
        return Ok(None);
    }
    Ok(search_k(g, k, semantics, Direction::Fewest))
}

/// `r⁺_k(G)`; same conventions as [`r_minus`].
pub fn r_plus(g: &Graph, k: usize, semantics: Semantics) -> Result<Option<Extremum>> {
    r_plus_with(g, k, semantics, &ExtremalLimits::default())
}

pub fn r_plus_with(
    g: &Graph,
    k: usize,
    semantics: Semantics,
    limits: &ExtremalLimits,
) -> Result<Option<Extremum>> {
    if target_range(g, k, limits)?.is_none() {
        return Ok(None);
    }
    Ok(search_k(g, k, semantics, Direction::Most))
}

/// One stage of the iterative schedule: each stage removes edges from the
/// previous stage's graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CumulativeStep {
    pub k: usize,
    pub removed: Vec<Edge>,
    pub step: usize,
    pub cumulative: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BondingProfile {
    pub semantics: Semantics,
    pub j: Option<usize>,
    /// Rows for `k = J(G)` down to 1.
    pub rows: Vec<BondingResult>,
    pub cumulative: Vec<CumulativeStep>,
}

pub fn bonding_profile(g: &Graph, semantics: Semantics) -> Result<BondingProfile> {
    bonding_profile_with(g, semantics, &ExtremalLimits::default())
}

pub fn bonding_profile_with(
    g: &Graph,
    semantics: Semantics,
    limits: &ExtremalLimits,
) -> Result<BondingProfile> {
    limits.check(g)?;
    let Some(j) = j_value_unchecked(g, Mode::AllVertices) else {
        return Ok(BondingProfile {
            semantics,
            j: None,
            rows: Vec::new(),
            cumulative: Vec::new(),
        });
    };
    let rows = (1..=j)
        .rev()
        .map(|k| BondingResult {
            k,
            semantics,
            r_minus: search_k(g, k, semantics, Direction::Fewest),
            r_plus: search_k(g, k, semantics, Direction::Most),
        })
        .collect();
    Ok(BondingProfile {
        semantics,
        j: Some(j),
        rows,
        cumulative: cumulative_schedule(g, j, semantics),
    })
}

/// Greedy stage-by-stage minimum removals from `J(G)` down to 1.
pub fn cumulative_schedule(g: &Graph, j: usize, semantics: Semantics) -> Vec<CumulativeStep> {
    let mut out = vec![CumulativeStep {
        k: j,
        removed: Vec::new(),
        step: 0,
        cumulative: 0,
    }];
    let mut current = g.clone();
    let mut total = 0;
    for k in (1..j).rev() {
        let Some(ext) = search_k(&current, k, semantics, Direction::Fewest) else {
            break;
        };
        total += ext.count;
        current = current.without_edges(&ext.witness);
        out.push(CumulativeStep {
            k,
            step: ext.count,
            cumulative: total,
            removed: ext.witness,
        });
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Repair {
    pub removed: Vec<Edge>,
    /// J of the repaired graph.
    pub j: usize,
}

/// A minimum edge set whose removal leaves a graph admitting a J-colouring.
/// Already-admissible graphs return an empty set.
pub fn minimal_repair(g: &Graph) -> Result<Repair> {
    minimal_repair_with(g, &ExtremalLimits::default())
}

pub fn minimal_repair_with(g: &Graph, limits: &ExtremalLimits) -> Result<Repair> {
    if !g.is_connected() {
        return Err(Error::Precondition {
            op: "minimal_repair",
            requirement: "a connected graph".into(),
        });
    }
    limits.check(g)?;
    let ext = subset_search(g, Direction::Fewest, 0..=g.size(), admits).expect("the edgeless graph admits");
    let repaired = g.without_edges(&ext.witness);
    let j = j_value_unchecked(&repaired, Mode::AllVertices).expect("repaired graph admits");
    debug_assert!(ext.count + g.order() <= g.size() + 1 || ext.count == 0);
    Ok(Repair {
        removed: ext.witness,
        j,
    })
}

/// `(r⁻_k(K_n), r⁺_k(K_n))` from the closed forms. `r⁻` is only known for
/// `k >= ⌈n/2⌉`.
pub fn kn_bonding_closed_form(n: usize, k: usize) -> Result<(Option<usize>, usize)> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::KOutOfRange {
            k,
            lo: 1,
            hi: n,
        });
    }
    let minus = (k >= n.div_ceil(2)).then_some(n - k);
    let plus = (n + 1 - k) * (n - k) / 2;
    Ok((minus, plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::ops::{derive, DerivativeKind};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn complete_four() {
        let k4 = fam(Family::Complete { n: 4 });
        let plain = Semantics::Plain;
        assert_eq!(r_minus(&k4, 4, plain).unwrap().unwrap().count, 0);
        assert_eq!(r_minus(&k4, 3, plain).unwrap().unwrap().count, 1);
        let conn = Semantics::ConnectedForKGe2;
        assert_eq!(r_plus(&k4, 2, conn).unwrap().unwrap().count, 3);
        // Two disjoint K2s are bipartite with J = 2.
        assert_eq!(r_plus(&k4, 2, plain).unwrap().unwrap().count, 4);
        let all = r_plus(&k4, 1, plain).unwrap().unwrap();
        assert_eq!(all.count, 6);
        assert_eq!(all.witness, k4.edges());
    }

    #[test]
    fn k_out_of_range() {
        let k4 = fam(Family::Complete { n: 4 });
        assert!(matches!(
            r_minus(&k4, 5, Semantics::Plain),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            r_minus(&k4, 0, Semantics::Plain),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn inadmissible_is_undefined() {
        let c5 = fam(Family::Cycle { n: 5 });
        assert_eq!(r_minus(&c5, 1, Semantics::Plain).unwrap(), None);
        assert!(bonding_profile(&c5, Semantics::Plain).unwrap().rows.is_empty());
    }

    #[test]
    fn scale_refusal() {
        let k8 = fam(Family::Complete { n: 8 });
        assert!(matches!(
            r_minus(&k8, 8, Semantics::Plain),
            Err(Error::ScaleExceeded(_))
        ));
    }

    #[test]
    fn profile_of_k4() {
        let p = bonding_profile(&fam(Family::Complete { n: 4 }), Semantics::Plain).unwrap();
        let ks: Vec<usize> = p.rows.iter().map(|r| r.k).collect();
        assert_eq!(ks, vec![4, 3, 2, 1]);
        let minus: Vec<usize> = p.rows.iter().map(|r| r.r_minus.as_ref().unwrap().count).collect();
        assert_eq!(minus, vec![0, 1, 2, 6]);
        assert_eq!(p.cumulative.last().unwrap().cumulative, 6);
    }

    #[test]
    fn profile_of_null() {
        let p = bonding_profile(&fam(Family::Null { n: 4 }), Semantics::Plain).unwrap();
        assert_eq!(p.rows.len(), 1);
        assert_eq!(p.rows[0].k, 1);
        assert_eq!(p.rows[0].r_minus.as_ref().unwrap().count, 0);
        assert_eq!(p.rows[0].r_plus.as_ref().unwrap().count, 0);
    }

    #[test]
    fn repairs() {
        let r = minimal_repair(&fam(Family::Cycle { n: 5 })).unwrap();
        assert_eq!(r.removed.len(), 1);
        assert_eq!(r.j, 2);
        let p4 = fam(Family::Path { n: 4 });
        assert!(minimal_repair(&p4).unwrap().removed.is_empty());
        let m = derive(&fam(Family::Path { n: 3 }), DerivativeKind::Middle).unwrap();
        let r = minimal_repair(&m).unwrap();
        assert!(!r.removed.is_empty());
        assert!(r.removed.len() <= m.size() - (m.order() - 1));
    }

    #[test]
    fn closed_forms() {
        assert_eq!(kn_bonding_closed_form(9, 5).unwrap().0, Some(4));
        assert_eq!(kn_bonding_closed_form(5, 1).unwrap().1, 10);
        assert_eq!(kn_bonding_closed_form(6, 6).unwrap(), (Some(0), 0));
        assert_eq!(kn_bonding_closed_form(6, 2).unwrap().0, None);
        assert_eq!(kn_bonding_closed_form(6, 3).unwrap().0, Some(3));
        assert!(kn_bonding_closed_form(4, 5).is_err());
    }
}
