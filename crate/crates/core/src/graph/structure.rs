use serde::Serialize;

use super::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub connected: bool,
    pub components: Vec<Vec<usize>>,
    pub bipartite: bool,
    /// Degree exactly one.
    pub pendant: Vec<usize>,
    /// Degree two or more.
    pub internal: Vec<usize>,
    pub isolated: Vec<usize>,
    pub diameter_path: Vec<usize>,
}

pub fn structure(g: &Graph) -> StructureReport {
    let n = g.order();
    let degrees = g.degrees();
    StructureReport {
        order: n,
        size: g.size(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        connected: g.is_connected(),
        components: g.components().into_iter().map(|c| c.to_vec()).collect(),
        bipartite: g.is_bipartite(),
        pendant: (0..n).filter(|&v| degrees[v] == 1).collect(),
        internal: (0..n).filter(|&v| degrees[v] >= 2).collect(),
        isolated: (0..n).filter(|&v| degrees[v] == 0).collect(),
        diameter_path: g.diameter_path(),
        degrees,
    }
}
