//! Brute-force oracles built only on adjacency queries.
#![allow(dead_code)]

use johan::graph::Graph;

pub struct Adj {
    pub n: usize,
    pub nb: Vec<Vec<usize>>,
}

impl Adj {
    pub fn of(g: &Graph) -> Self {
        let n = g.order();
        let mut nb = vec![Vec::new(); n];
        for (u, v) in g.edges() {
            nb[u].push(v);
            nb[v].push(u);
        }
        Adj { n, nb }
    }

    fn edgeless(&self) -> bool {
        self.nb.iter().all(Vec::is_empty)
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.nb[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Every set partition of `0..n` as a restricted growth string with
/// colours `1..=blocks`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 1..=max + 1 {
            cur.push(c);
            rec(i + 1, n, max.max(c), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, 0, &mut Vec::new(), &mut out);
    out
}

pub fn proper(a: &Adj, c: &[usize]) -> bool {
    (0..a.n).all(|v| a.nb[v].iter().all(|&u| c[u] != c[v]))
}

pub fn rainbow(a: &Adj, c: &[usize], v: usize, k: usize) -> bool {
    let mut seen = vec![false; k + 1];
    seen[c[v]] = true;
    for &u in &a.nb[v] {
        seen[c[u]] = true;
    }
    seen[1..].iter().all(|&s| s)
}

pub fn blocks(c: &[usize]) -> usize {
    c.iter().copied().max().unwrap_or(0)
}

/// Feasible colour counts, with the edgeless convention `{1}`.
pub fn feasible(g: &Graph, internal: bool) -> Vec<usize> {
    let a = Adj::of(g);
    if a.edgeless() {
        return vec![1];
    }
    let mut ks: Vec<usize> = partitions(a.n)
        .into_iter()
        .filter(|c| proper(&a, c))
        .filter(|c| {
            let k = blocks(c);
            (0..a.n).all(|v| (internal && a.nb[v].len() < 2) || rainbow(&a, c, v, k))
        })
        .map(|c| blocks(&c))
        .collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

pub fn j(g: &Graph, internal: bool) -> Option<usize> {
    feasible(g, internal).last().copied()
}

pub fn chi(g: &Graph) -> usize {
    let a = Adj::of(g);
    partitions(a.n)
        .into_iter()
        .filter(|c| proper(&a, c))
        .map(|c| blocks(&c))
        .min()
        .unwrap_or(0)
}

/// (min, max) rainbow vertex counts over proper χ-colourings.
pub fn r_chi_range(g: &Graph) -> (usize, usize) {
    let a = Adj::of(g);
    let x = chi(g);
    let counts: Vec<usize> = partitions(a.n)
        .into_iter()
        .filter(|c| blocks(c) == x && proper(&a, c))
        .map(|c| (0..a.n).filter(|&v| rainbow(&a, &c, v, x)).count())
        .collect();
    (*counts.iter().min().unwrap(), *counts.iter().max().unwrap())
}

/// Lexicographically largest sorted class-size vector over proper
/// χ-colourings.
pub fn chi_minus_theta(g: &Graph) -> Vec<usize> {
    let a = Adj::of(g);
    let x = chi(g);
    partitions(a.n)
        .into_iter()
        .filter(|c| blocks(c) == x && proper(&a, c))
        .map(|c| {
            let mut t = vec![0; x];
            for &col in &c {
                t[col - 1] += 1;
            }
            t.sort_unstable_by(|a, b| b.cmp(a));
            t
        })
        .max()
        .unwrap()
}

/// (r⁻ₖ, r⁺ₖ) by enumerating every removal subset.
pub fn bonding(g: &Graph, k: usize, connected: bool) -> (Option<usize>, Option<usize>) {
    let edges = g.edges();
    let p = edges.len();
    let mut lo: Option<usize> = None;
    let mut hi: Option<usize> = None;
    for mask in 0u32..(1 << p) {
        let kept: Vec<_> = (0..p).filter(|i| mask >> i & 1 == 0).map(|i| edges[i]).collect();
        let h = Graph::new(g.order(), kept).unwrap();
        if connected && k >= 2 && !Adj::of(&h).connected() {
            continue;
        }
        if j(&h, false) == Some(k) {
            let s = mask.count_ones() as usize;
            lo = Some(lo.map_or(s, |x| x.min(s)));
            hi = Some(hi.map_or(s, |x| x.max(s)));
        }
    }
    (lo, hi)
}
