use serde::{Deserialize, Serialize};

use crate::graph::{EdgeId, WeightedGraph};
use crate::rational::Rational;

/// A 1-cycle given by its edge support (ids in the source graph), with its
/// exact length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cycle {
    pub length_mu: Rational,
    pub edges: Vec<EdgeId>,
}

impl Cycle {
    /// `lengths` is indexed by graph edge id.
    pub fn new(mut edges: Vec<EdgeId>, lengths: &[Rational]) -> Self {
        edges.sort_unstable();
        let length_mu = edges.iter().map(|&e| lengths[e]).sum();
        Cycle { length_mu, edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Every vertex has even degree in the support.
    pub fn is_closed(&self, g: &WeightedGraph) -> bool {
        let mut parity = vec![false; g.n_vertices()];
        for &e in &self.edges {
            let edge = g.edge(e);
            parity[edge.u] ^= true;
            parity[edge.v] ^= true;
        }
        parity.iter().all(|p| !p)
    }

    /// Vertex pairs of the support, for reports.
    pub fn vertex_pairs(&self, g: &WeightedGraph) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .map(|&e| (g.edge(e).u, g.edge(e).v))
            .collect()
    }
}

/// Per-edge lengths of a graph, indexed by edge id.
pub fn edge_lengths(g: &WeightedGraph) -> Vec<Rational> {
    g.weights().copied().collect()
}
