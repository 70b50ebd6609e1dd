//! Rainbow neighbourhoods and the exact J / J* solvers.
//!
//! A vertex is rainbow under a `k`-colouring when its closed neighbourhood
//! meets all `k` colour classes. A J-colouring makes every vertex rainbow;
//! a J*-colouring only the internal ones (degree at least two).

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{
    check_domain, chi_minus_colouring, chromatic_number, first_conflict, for_each_proper_colouring,
    Colouring,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Which vertices must be rainbow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Every vertex (J-colouring).
    AllVertices,
    /// Vertices of degree at least two (J*-colouring).
    InternalOnly,
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" | "all_vertices" | "j" => Ok(Mode::AllVertices),
            "internal" | "internal_only" | "jstar" => Ok(Mode::InternalOnly),
            other => Err(Error::Config(format!("unknown mode {other:?}"))),
        }
    }
}

pub fn required_vertices(g: &Graph, mode: Mode) -> VertexSet {
    match mode {
        Mode::AllVertices => g.vertices(),
        Mode::InternalOnly => g.internal_vertices(),
    }
}

/// Size caps for the exhaustive solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest order for which a full J-profile is computed.
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: 12 }
    }
}

impl Limits {
    pub fn with_max_order(max_order: usize) -> Self {
        Limits { max_order }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.order() > self.max_order {
            return Err(Error::ScaleExceeded(format!(
                "order {} exceeds the profile cap of {}",
                g.order(),
                self.max_order
            )));
        }
        Ok(())
    }
}

fn all_colours(k: usize) -> u128 {
    ((1u128 << k) - 1) << 1
}

pub fn is_rainbow_vertex(g: &Graph, c: &Colouring, v: usize) -> Result<bool> {
    check_domain(g, c)?;
    if let Some((a, b)) = first_conflict(g, c) {
        return Err(Error::ImproperColouring(a, b));
    }
    if v >= g.order() {
        return Err(Error::IndexOutOfRange {
            index: v,
            order: g.order(),
        });
    }
    Ok(rainbow_at(g, c, v))
}

fn rainbow_at(g: &Graph, c: &Colouring, v: usize) -> bool {
    c.palette_of(g.closed_neighbourhood(v)) == all_colours(c.k())
}

/// Vertices that are rainbow under `c`. No properness check.
pub fn rainbow_vertices(g: &Graph, c: &Colouring) -> VertexSet {
    (0..g.order()).filter(|&v| rainbow_at(g, c, v)).collect()
}

/// Re-checks a claimed rainbow colouring: proper, exactly `k` colours, and
/// every required vertex rainbow.
pub fn validate_witness(g: &Graph, c: &Colouring, k: usize, mode: Mode) -> bool {
    c.order() == g.order()
        && c.k() == k
        && first_conflict(g, c).is_none()
        && required_vertices(g, mode)
            .iter()
            .all(|v| rainbow_at(g, c, v))
}

/// Largest order for the sweep over all chromatic colourings.
pub const SWEEP_MAX_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowNumber {
    pub chromatic_number: usize,
    /// `r_χ` under the canonical χ⁻-colouring.
    pub canonical: usize,
    pub canonical_vertices: Vec<usize>,
    pub canonical_colouring: Colouring,
    /// Extremes of `r_χ` over every proper χ-colouring, when swept.
    pub sweep: Option<RainbowSweep>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowSweep {
    pub min: usize,
    pub max: usize,
    /// Labelled proper χ-colourings examined.
    pub colourings: u64,
    /// A colouring attaining `max`.
    pub max_witness: Colouring,
}

pub fn rainbow_neighbourhood_number(g: &Graph) -> Result<RainbowNumber> {
    if g.order() == 0 {
        return Err(Error::Precondition {
            op: "rainbow_neighbourhood_number",
            requirement: "a nonempty graph".into(),
        });
    }
    let chi = chromatic_number(g).0;
    let canonical_colouring = chi_minus_colouring(g);
    let canonical_set = rainbow_vertices(g, &canonical_colouring);
    let sweep = (g.order() <= SWEEP_MAX_ORDER).then(|| sweep_chromatic(g, chi));
    Ok(RainbowNumber {
        chromatic_number: chi,
        canonical: canonical_set.len(),
        canonical_vertices: canonical_set.to_vec(),
        canonical_colouring,
        sweep,
    })
}

fn sweep_chromatic(g: &Graph, chi: usize) -> RainbowSweep {
    let mut min = usize::MAX;
    let mut max = 0;
    let mut classes = 0u64;
    let mut best = None;
    for_each_proper_colouring(g, chi, |colours| {
        let c = Colouring::normalized(colours);
        let r = rainbow_vertices(g, &c).len();
        min = min.min(r);
        if r > max || best.is_none() {
            max = max.max(r);
            best = Some(c);
        }
        classes += 1;
        ControlFlow::Continue(())
    });
    let perms: u64 = (1..=chi as u64).product();
    RainbowSweep {
        min,
        max,
        colourings: classes * perms,
        max_witness: best.expect("a chromatic colouring exists"),
    }
}

/// Proper `k`-colouring making every required vertex rainbow, if any.
/// The witness is the lexicographically least such colour sequence.
pub fn find_rainbow_colouring(g: &Graph, k: usize, mode: Mode) -> Option<Colouring> {
    RainbowSearch::new(g, k, required_vertices(g, mode))?.run()
}

/// Backtracking over vertices in index order with forward checks on every
/// required closed neighbourhood within distance two of the last move.
struct RainbowSearch<'a> {
    g: &'a Graph,
    k: usize,
    full: u64,
    colour: Vec<usize>,
    /// Colour multiplicities inside each closed neighbourhood.
    counts: Vec<Vec<u16>>,
    /// Colours present in each closed neighbourhood, bit `c - 1`.
    present: Vec<u64>,
    uncoloured: VertexSet,
    /// Required vertices whose checks a move at `v` can affect.
    watch: Vec<VertexSet>,
}

impl<'a> RainbowSearch<'a> {
    fn new(g: &'a Graph, k: usize, required: VertexSet) -> Option<Self> {
        let n = g.order();
        if k == 0 || k > n || k > 64 {
            return None;
        }
        if required.iter().any(|v| g.degree(v) + 1 < k) {
            return None;
        }
        let watch = (0..n)
            .map(|v| {
                let mut s = VertexSet::EMPTY;
                for u in g.closed_neighbourhood(v).iter() {
                    s = s.union(g.closed_neighbourhood(u));
                }
                s.intersection(required)
            })
            .collect();
        Some(RainbowSearch {
            g,
            k,
            full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
            colour: vec![0; n],
            counts: vec![vec![0; k + 1]; n],
            present: vec![0; n],
            uncoloured: g.vertices(),
            watch,
        })
    }

    fn run(mut self) -> Option<Colouring> {
        if self.descend(0, 0) {
            Some(Colouring::with_count(self.colour, self.k).expect("search uses all k colours"))
        } else {
            None
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured.remove(v);
        for w in self.g.closed_neighbourhood(v).iter() {
            self.counts[w][c] += 1;
            self.present[w] |= 1 << (c - 1);
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = 0;
        self.uncoloured.insert(v);
        for w in self.g.closed_neighbourhood(v).iter() {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.present[w] &= !(1 << (c - 1));
            }
        }
    }

    /// Colours an uncoloured vertex may still take.
    #[inline]
    fn available(&self, u: usize) -> u64 {
        self.full & !self.present[u]
    }

    fn consistent(&self, v: usize, used: usize) -> bool {
        let remaining = self.uncoloured.len();
        if used + remaining < self.k {
            return false;
        }
        for u in self.g.neighbours(v).intersection(self.uncoloured).iter() {
            if self.available(u) == 0 {
                return false;
            }
        }
        for w in self.watch[v].iter() {
            let missing = self.full & !self.present[w];
            if missing == 0 {
                continue;
            }
            let open = self.g.closed_neighbourhood(w).intersection(self.uncoloured);
            if (missing.count_ones() as usize) > open.len() {
                return false;
            }
            if !self.can_cover(missing, open) {
                return false;
            }
        }
        true
    }

    /// Whether distinct vertices of `slots` can supply every colour in
    /// `missing` (bipartite matching, colours against vertices).
    fn can_cover(&self, missing: u64, slots: VertexSet) -> bool {
        let slots: Vec<usize> = slots.to_vec();
        let avail: Vec<u64> = slots.iter().map(|&u| self.available(u) & missing).collect();
        let union = avail.iter().fold(0, |a, b| a | b);
        if union & missing != missing {
            return false;
        }
        let mut owner: Vec<Option<usize>> = vec![None; 64];
        let mut m = missing;
        while m != 0 {
            let c = m.trailing_zeros() as usize;
            m &= m - 1;
            let mut seen = 0u64;
            if !augment(c, &avail, &mut owner, &mut seen) {
                return false;
            }
        }
        true
    }

    fn descend(&mut self, v: usize, used: usize) -> bool {
        let n = self.g.order();
        if v == n {
            return used == self.k;
        }
        let limit = self.k.min(used + 1);
        let avail = self.available(v);
        for c in 1..=limit {
            if avail >> (c - 1) & 1 == 0 {
                continue;
            }
            self.assign(v, c);
            let next_used = used.max(c);
            if self.consistent(v, next_used) && self.descend(v + 1, next_used) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}

/// Kuhn augmenting path: colour `c` looks for a slot.
fn augment(c: usize, avail: &[u64], owner: &mut [Option<usize>], seen: &mut u64) -> bool {
    for (slot, &mask) in avail.iter().enumerate() {
        if mask >> c & 1 == 0 || *seen >> slot & 1 == 1 {
            continue;
        }
        *seen |= 1 << slot;
        let holder = owner.iter().position(|o| *o == Some(slot));
        match holder {
            None => {
                owner[c] = Some(slot);
                return true;
            }
            Some(prev) => {
                if augment(prev, avail, owner, seen) {
                    owner[c] = Some(slot);
                    return true;
                }
            }
        }
    }
    false
}

/// Feasible colour counts for one rainbow mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JProfile {
    pub mode: Mode,
    pub feasible_k: Vec<usize>,
    #[serde(skip)]
    pub witnesses: BTreeMap<usize, Colouring>,
    /// Largest feasible count; `None` when the graph is inadmissible.
    pub j: Option<usize>,
}

impl JProfile {
    pub fn admits(&self) -> bool {
        self.j.is_some()
    }

    pub fn is_feasible(&self, k: usize) -> bool {
        self.feasible_k.binary_search(&k).is_ok()
    }

    /// `{mode, feasible_k, j}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("profile serializes")
    }
}

/// Largest `k` worth trying for this mode.
pub fn k_upper_bound(g: &Graph, mode: Mode) -> usize {
    let n = g.order();
    match mode {
        Mode::AllVertices => (g.min_degree() + 1).min(n),
        Mode::InternalOnly => {
            let internal = g.internal_vertices();
            match internal.iter().map(|v| g.degree(v)).min() {
                Some(d) => (d + 1).min(n),
                None => n,
            }
        }
    }
}

pub fn j_profile(g: &Graph, mode: Mode) -> Result<JProfile> {
    j_profile_with(g, mode, &Limits::default())
}

/// Every `k` up to the degree bound is tried; feasible sets need not be
/// intervals. Edgeless graphs take the value 1 in both modes.
pub fn j_profile_with(g: &Graph, mode: Mode, limits: &Limits) -> Result<JProfile> {
    limits.check(g)?;
    if g.is_edgeless() {
        let mut witnesses = BTreeMap::new();
        if g.order() > 0 {
            witnesses.insert(1, Colouring::with_count(vec![1; g.order()], 1)?);
        }
        return Ok(JProfile {
            mode,
            feasible_k: vec![1],
            witnesses,
            j: Some(1),
        });
    }
    let ub = k_upper_bound(g, mode);
    let found: Vec<(usize, Colouring)> = (1..=ub)
        .into_par_iter()
        .filter_map(|k| find_rainbow_colouring(g, k, mode).map(|c| (k, c)))
        .collect();
    let witnesses: BTreeMap<usize, Colouring> = found.into_iter().collect();
    let feasible_k: Vec<usize> = witnesses.keys().copied().collect();
    Ok(JProfile {
        mode,
        j: feasible_k.last().copied(),
        feasible_k,
        witnesses,
    })
}

/// Largest feasible `k`, scanning down from the degree bound.
pub fn j_value_with(g: &Graph, mode: Mode, limits: &Limits) -> Result<Option<usize>> {
    limits.check(g)?;
    Ok(j_value_unchecked(g, mode))
}

pub(crate) fn j_value_unchecked(g: &Graph, mode: Mode) -> Option<usize> {
    if g.is_edgeless() {
        return Some(1);
    }
    (1..=k_upper_bound(g, mode))
        .rev()
        .find(|&k| find_rainbow_colouring(g, k, mode).is_some())
}

/// `J(G)`, or `None` when no J-colouring exists.
pub fn j_number(g: &Graph) -> Result<Option<usize>> {
    j_value_with(g, Mode::AllVertices, &Limits::default())
}

/// `J*(G)`, or `None` when no J*-colouring exists.
pub fn j_star_number(g: &Graph) -> Result<Option<usize>> {
    j_value_with(g, Mode::InternalOnly, &Limits::default())
}

/// Three-colouring of a tree along a diameter path, continuing the cyclic
/// sequence 1, 2, 3 outward along every branch.
pub fn tree_jstar_colouring(t: &Graph) -> Result<Colouring> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 2 {
        return Err(Error::Precondition {
            op: "tree_jstar_colouring",
            requirement: "a tree with at least two vertices".into(),
        });
    }
    let next = |c: usize| c % 3 + 1;
    let mut colour = vec![0usize; t.order()];
    let path = t.diameter_path();
    let mut queue = std::collections::VecDeque::new();
    for (i, &v) in path.iter().enumerate() {
        colour[v] = i % 3 + 1;
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for u in t.neighbours(v).iter() {
            if colour[u] == 0 {
                colour[u] = next(colour[v]);
                queue.push_back(u);
            }
        }
    }
    Colouring::new(colour)
}
