//! Proper colourings, the exact chromatic number, and the lexicographic
//! χ⁻ / χ⁺ colouring conventions.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Total assignment of colours `1..=k` to vertices, every colour used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ColouringData", into = "ColouringData")]
pub struct Colouring {
    colours: Vec<usize>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct ColouringData {
    k: usize,
    colours: Vec<usize>,
}

impl TryFrom<ColouringData> for Colouring {
    type Error = Error;

    fn try_from(d: ColouringData) -> Result<Self> {
        Colouring::with_count(d.colours, d.k)
    }
}

impl From<Colouring> for ColouringData {
    fn from(c: Colouring) -> Self {
        ColouringData {
            k: c.k,
            colours: c.colours,
        }
    }
}

impl Colouring {
    /// `k` is taken as the largest colour present.
    pub fn new(colours: Vec<usize>) -> Result<Self> {
        let k = colours.iter().copied().max().unwrap_or(0);
        Self::with_count(colours, k)
    }

    pub fn with_count(colours: Vec<usize>, k: usize) -> Result<Self> {
        let mut used = vec![false; k + 1];
        for (v, &c) in colours.iter().enumerate() {
            if c == 0 || c > k {
                return Err(Error::InvalidColouring(format!(
                    "vertex {v} has colour {c} outside 1..={k}"
                )));
            }
            used[c] = true;
        }
        if let Some(c) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidColouring(format!("colour {c} is unused")));
        }
        Ok(Colouring { colours, k })
    }

    /// Relabels colours by order of first appearance, so vertex 0 gets
    /// colour 1 and so on.
    pub fn normalized(colours: &[usize]) -> Self {
        let mut map = HashMap::new();
        let out: Vec<usize> = colours
            .iter()
            .map(|c| {
                let next = map.len() + 1;
                *map.entry(*c).or_insert(next)
            })
            .collect();
        let k = map.len();
        Colouring { colours: out, k }
    }

    pub(crate) fn from_classes(n: usize, classes: &[VertexSet]) -> Self {
        let mut colours = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                colours[v] = i + 1;
            }
        }
        Colouring {
            colours,
            k: classes.len(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.colours.len()
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// `θ(c_i)` for `i = 1..=k`.
    pub fn theta(&self) -> Vec<usize> {
        let mut t = vec![0; self.k];
        for &c in &self.colours {
            t[c - 1] += 1;
        }
        t
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colours.iter().enumerate() {
            out[c - 1].insert(v);
        }
        out
    }

    /// Colours present in `set`, as a bit mask with bit `c` for colour `c`.
    pub(crate) fn palette_of(&self, set: VertexSet) -> u128 {
        set.iter().fold(0, |m, v| m | 1u128 << self.colours[v])
    }

    /// The `k`-header text form: `k` then one `v colour` line per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.k);
        for (v, c) in self.colours.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let k: usize = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| Error::InvalidColouring("missing colour-count header".into()))?;
        let mut colours = Vec::new();
        for (i, line) in lines.enumerate() {
            let parts: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidColouring(format!("bad line {line:?}")))?;
            match parts.as_slice() {
                [v, c] if *v == i => colours.push(*c),
                _ => {
                    return Err(Error::InvalidColouring(format!(
                        "expected \"{i} colour\", got {line:?}"
                    )))
                }
            }
        }
        Colouring::with_count(colours, k)
    }
}

pub fn is_proper(g: &Graph, c: &Colouring) -> Result<bool> {
    check_domain(g, c)?;
    Ok(first_conflict(g, c).is_none())
}

pub(crate) fn check_domain(g: &Graph, c: &Colouring) -> Result<()> {
    if c.order() != g.order() {
        return Err(Error::ColouringDomainMismatch {
            expected: g.order(),
            found: c.order(),
        });
    }
    Ok(())
}

pub(crate) fn first_conflict(g: &Graph, c: &Colouring) -> Option<(usize, usize)> {
    g.edges()
        .into_iter()
        .find(|&(u, v)| c.colour(u) == c.colour(v))
}

/// Maps colour `j` to `k - (j - 1)`.
pub fn invert_colouring(c: &Colouring) -> Colouring {
    Colouring {
        colours: c.colours.iter().map(|&j| c.k + 1 - j).collect(),
        k: c.k,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColourStats {
    pub k: usize,
    pub theta: Vec<usize>,
    /// `ι(v)`: the colour index of `v`.
    pub iota: Vec<usize>,
    /// `ι′(v) = k - (ι(v) - 1)`.
    pub iota_prime: Vec<usize>,
}

pub fn colour_stats(c: &Colouring) -> ColourStats {
    ColourStats {
        k: c.k,
        theta: c.theta(),
        iota: c.colours.clone(),
        iota_prime: c.colours.iter().map(|&j| c.k - (j - 1)).collect(),
    }
}

/// Exact chromatic number with a witness colouring.
///
/// DSATUR greedy gives the upper bound, a maximum clique the lower bound,
/// and DSATUR-ordered backtracking closes the gap.
pub fn chromatic_number(g: &Graph) -> (usize, Colouring) {
    let n = g.order();
    if n == 0 {
        return (0, Colouring::normalized(&[]));
    }
    let mut best = dsatur_greedy(g);
    let lower = max_clique(g).len();
    let mut upper = best.k();
    while upper > lower {
        match k_colouring(g, upper - 1) {
            Some(c) => {
                upper = c.k();
                best = c;
            }
            None => break,
        }
    }
    (best.k(), best)
}

fn dsatur_greedy(g: &Graph) -> Colouring {
    let n = g.order();
    let mut colour = vec![0usize; n];
    let mut sat = vec![0u128; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == 0)
            .max_by_key(|&v| (sat[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (1..).find(|&c| sat[v] >> c & 1 == 0).unwrap();
        colour[v] = c;
        for u in g.neighbours(v).iter() {
            sat[u] |= 1 << c;
        }
    }
    Colouring::normalized(&colour)
}

/// Proper colouring with at most `k` colours, if one exists.
pub(crate) fn k_colouring(g: &Graph, k: usize) -> Option<Colouring> {
    let n = g.order();
    if n == 0 {
        return Some(Colouring::normalized(&[]));
    }
    if k == 0 {
        return None;
    }
    struct St<'a> {
        g: &'a Graph,
        k: usize,
        colour: Vec<usize>,
        sat: Vec<Vec<u32>>,
    }
    fn rec(st: &mut St, left: usize, used: usize) -> bool {
        if left == 0 {
            return true;
        }
        let n = st.colour.len();
        let sat_count = |st: &St, v: usize| st.sat[v].iter().filter(|&&x| x > 0).count();
        let v = (0..n)
            .filter(|&v| st.colour[v] == 0)
            .max_by_key(|&v| {
                let free = st
                    .g
                    .neighbours(v)
                    .iter()
                    .filter(|&u| st.colour[u] == 0)
                    .count();
                (sat_count(st, v), free, std::cmp::Reverse(v))
            })
            .unwrap();
        let limit = st.k.min(used + 1);
        for c in 1..=limit {
            if st.sat[v][c] > 0 {
                continue;
            }
            st.colour[v] = c;
            for u in st.g.neighbours(v).iter() {
                st.sat[u][c] += 1;
            }
            if rec(st, left - 1, used.max(c)) {
                return true;
            }
            for u in st.g.neighbours(v).iter() {
                st.sat[u][c] -= 1;
            }
            st.colour[v] = 0;
        }
        false
    }
    let mut st = St {
        g,
        k,
        colour: vec![0; n],
        sat: vec![vec![0; k + 1]; n],
    };
    rec(&mut st, n, 0).then(|| Colouring::normalized(&st.colour))
}

/// A maximum clique, by bit-set branch and bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    fn rec(g: &Graph, current: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
        if cand.is_empty() {
            if current.len() > best.len() {
                *best = current;
            }
            return;
        }
        while let Some(v) = cand.first() {
            if current.len() + cand.len() <= best.len() {
                return;
            }
            let mut next = current;
            next.insert(v);
            rec(g, next, cand.intersection(g.neighbours(v)), best);
            cand.remove(v);
        }
        if current.len() > best.len() {
            *best = current;
        }
    }
    let mut best = VertexSet::EMPTY;
    rec(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// Visits every proper colouring using exactly `k` colours, once per
/// colour-permutation class (colours appear in first-use order).
pub fn for_each_proper_colouring<F>(g: &Graph, k: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn rec<F: FnMut(&[usize]) -> ControlFlow<()>>(
        g: &Graph,
        k: usize,
        v: usize,
        used: usize,
        colour: &mut Vec<usize>,
        visit: &mut F,
    ) -> ControlFlow<()> {
        let n = g.order();
        if v == n {
            if used == k {
                return visit(colour);
            }
            return ControlFlow::Continue(());
        }
        if used + (n - v) < k {
            return ControlFlow::Continue(());
        }
        for c in 1..=k.min(used + 1) {
            if g
                .neighbours(v)
                .iter()
                .any(|u| u < v && colour[u] == c)
            {
                continue;
            }
            colour[v] = c;
            rec(g, k, v + 1, used.max(c), colour, visit)?;
        }
        colour[v] = 0;
        ControlFlow::Continue(())
    }
    let mut colour = vec![0; g.order()];
    let _ = rec(g, k, 0, 0, &mut colour, &mut visit);
}

/// The canonical χ⁻-colouring: among proper χ(G)-colourings, the one whose
/// class-size vector `θ` is lexicographically largest; ties go to the
/// lexicographically smallest first class, then recursively.
pub fn chi_minus_colouring(g: &Graph) -> Colouring {
    let (chi, _) = chromatic_number(g);
    let mut memo = HashMap::new();
    let (_, classes) = best_theta(g, g.vertices(), chi, &mut memo)
        .expect("a chromatic colouring exists");
    Colouring::from_classes(g.order(), &classes)
}

/// The class partitions of every χ⁻-colouring, each listed by decreasing
/// class size and then by smallest member set.
pub fn chi_minus_partitions(g: &Graph) -> Vec<Vec<VertexSet>> {
    let (chi, _) = chromatic_number(g);
    let target = chi_minus_colouring(g).theta();
    let mut out = Vec::new();
    for_each_proper_colouring(g, chi, |colours| {
        let mut classes = Colouring::normalized(colours).classes();
        classes.sort_by(|a, b| b.len().cmp(&a.len()).then(a.to_vec().cmp(&b.to_vec())));
        if classes.iter().map(|s| s.len()).eq(target.iter().copied()) {
            out.push(classes);
        }
        ControlFlow::Continue(())
    });
    out.sort_by_cached_key(|p| p.iter().map(|s| s.to_vec()).collect::<Vec<_>>());
    out.dedup();
    out
}

/// All proper χ(G)-colourings attaining the lexicographically maximum `θ`,
/// in canonical tie-break order.
pub fn all_chi_minus_colourings(g: &Graph) -> Vec<Colouring> {
    let mut out = Vec::new();
    for sorted in chi_minus_partitions(g) {
        // Every ordering of equal-sized classes is a distinct χ⁻ labelling.
        push_orderings(g.order(), &sorted, &mut out);
    }
    out.sort_by_cached_key(|c| c.classes().iter().map(|s| s.to_vec()).collect::<Vec<_>>());
    out.dedup();
    out
}

fn push_orderings(n: usize, sorted: &[VertexSet], out: &mut Vec<Colouring>) {
    // Permute within runs of equal class size.
    fn rec(n: usize, runs: &[Vec<VertexSet>], i: usize, acc: &mut Vec<VertexSet>, out: &mut Vec<Colouring>) {
        if i == runs.len() {
            out.push(Colouring::from_classes(n, acc));
            return;
        }
        let run = &runs[i];
        let mut idx: Vec<usize> = (0..run.len()).collect();
        loop {
            let len = acc.len();
            acc.extend(idx.iter().map(|&j| run[j]));
            rec(n, runs, i + 1, acc, out);
            acc.truncate(len);
            if !next_permutation(&mut idx) {
                break;
            }
        }
    }
    let mut runs: Vec<Vec<VertexSet>> = Vec::new();
    for &s in sorted {
        match runs.last_mut() {
            Some(r) if r[0].len() == s.len() => r.push(s),
            _ => runs.push(vec![s]),
        }
    }
    rec(n, &runs, 0, &mut Vec::new(), out);
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

type ThetaMemo = HashMap<(u64, usize), Option<(Vec<usize>, Vec<VertexSet>)>>;

/// Lexicographically maximum `θ` for colouring `rest` with exactly
/// `colours` nonempty independent classes.
fn best_theta(
    g: &Graph,
    rest: VertexSet,
    colours: usize,
    memo: &mut ThetaMemo,
) -> Option<(Vec<usize>, Vec<VertexSet>)> {
    if let Some(hit) = memo.get(&(rest.0, colours)) {
        return hit.clone();
    }
    let result = if colours == 0 {
        rest.is_empty().then(|| (Vec::new(), Vec::new()))
    } else if rest.len() < colours {
        None
    } else if colours == 1 {
        is_independent(g, rest).then(|| (vec![rest.len()], vec![rest]))
    } else {
        let mut found = None;
        let max_size = rest.len() - (colours - 1);
        for size in (1..=max_size).rev() {
            let mut best: Option<(Vec<usize>, Vec<VertexSet>)> = None;
            independent_subsets(g, rest, size, &mut |s| {
                if let Some((theta, classes)) = best_theta(g, rest.difference(s), colours - 1, memo) {
                    let better = match &best {
                        None => true,
                        Some((bt, _)) => theta.as_slice() > &bt[1..],
                    };
                    if better {
                        let mut t = vec![size];
                        t.extend(theta);
                        let mut c = vec![s];
                        c.extend(classes);
                        best = Some((t, c));
                    }
                }
            });
            if best.is_some() {
                found = best;
                break;
            }
        }
        found
    };
    memo.insert((rest.0, colours), result.clone());
    result
}

fn is_independent(g: &Graph, s: VertexSet) -> bool {
    s.iter().all(|v| g.neighbours(v).intersection(s).is_empty())
}

/// Independent subsets of `within` with exactly `size` members, in
/// lexicographic order of their sorted member lists.
fn independent_subsets<F: FnMut(VertexSet)>(g: &Graph, within: VertexSet, size: usize, f: &mut F) {
    fn rec<F: FnMut(VertexSet)>(g: &Graph, cand: VertexSet, chosen: VertexSet, need: usize, f: &mut F) {
        if need == 0 {
            f(chosen);
            return;
        }
        let mut cand = cand;
        while cand.len() >= need {
            let v = cand.first().unwrap();
            cand.remove(v);
            let mut next = chosen;
            next.insert(v);
            rec(g, cand.difference(g.neighbours(v)), next, need - 1, f);
        }
    }
    rec(g, within, VertexSet::EMPTY, size, f);
}
