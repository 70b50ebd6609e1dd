//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bit-set per vertex.

mod families;
mod io;
mod structure;

pub use families::{generate, Family};
pub use io::{parse_graph, serialize_graph, GraphFormat};
pub use structure::{structure, StructureReport};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices below [`MAX_ORDER`].
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An edge as an ordered pair `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// Simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    size: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; order];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::IndexOutOfRange { index: x, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Null graph on `n` vertices.
    pub fn null(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let size = adj.iter().map(|s| s.len()).sum::<usize>() / 2;
        Graph { adj, size }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbourhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size);
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// `δ(G)`; zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// `Δ(G)`; zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_edgeless(&self) -> bool {
        self.size == 0
    }

    /// Vertices of degree at least two.
    pub fn internal_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) >= 2).collect()
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn has_pendant(&self) -> bool {
        (0..self.order()).any(|v| self.degree(v) == 1)
    }

    /// Same vertex set with the given edges deleted. Pairs that are not
    /// edges are ignored.
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if u < adj.len() && v < adj.len() {
                adj[u].remove(v);
                adj[v].remove(u);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Induced subgraph on `keep`, relabelled in increasing index order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let index: Vec<usize> = keep.to_vec();
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in index.iter().enumerate() {
            pos[v] = i;
        }
        let adj = index
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(keep)
                    .iter()
                    .map(|u| pos[u])
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let all = self.vertices();
        let adj = (0..n)
            .map(|v| {
                let mut s = all.difference(self.adj[v]);
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, self.vertices());
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub(crate) fn reach(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut comp = VertexSet::singleton(s);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.reach(0, self.vertices()).len() == self.order()
    }

    /// Proper 2-colouring by BFS, if one exists. Sides are `false`/`true`.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut side = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for u in self.adj[v].iter() {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size + 1 == self.order() && self.is_connected()
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        self.bfs(s).0
    }

    /// BFS distances and parents; parents are the smallest-index
    /// predecessor at the previous level.
    fn bfs(&self, s: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let n = self.order();
        let mut dist = vec![None; n];
        let mut parent = vec![None; n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for u in self.adj[v].iter() {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    parent[u] = Some(v);
                    queue.push_back(u);
                }
            }
        }
        (dist, parent)
    }

    /// Shortest path from `s` to `t` as a vertex sequence.
    pub fn shortest_path(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let (dist, parent) = self.bfs(s);
        dist[t]?;
        let mut path = vec![t];
        let mut cur = t;
        while let Some(p) = parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    /// A longest shortest path. Among vertex pairs at maximum distance
    /// (within a component), the lexicographically smallest pair is used.
    pub fn diameter_path(&self) -> Vec<usize> {
        let n = self.order();
        if n == 0 {
            return Vec::new();
        }
        let mut best = (0usize, 0usize, 0usize);
        for s in 0..n {
            let dist = self.distances_from(s);
            for (t, d) in dist.iter().enumerate().skip(s + 1) {
                if let Some(d) = *d {
                    if d > best.0 {
                        best = (d, s, t);
                    }
                }
            }
        }
        let (_, s, t) = best;
        self.shortest_path(s, t).expect("pair chosen within a component")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// Serializable edge-list view of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphData {
    pub order: usize,
    pub edges: Vec<Edge>,
}

impl From<&Graph> for GraphData {
    fn from(g: &Graph) -> Self {
        GraphData {
            order: g.order(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<GraphData> for Graph {
    type Error = Error;

    fn try_from(d: GraphData) -> Result<Graph> {
        Graph::new(d.order, d.edges)
    }
}
