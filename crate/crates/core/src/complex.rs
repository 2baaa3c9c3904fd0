//! Flag (clique) complexes truncated at dimension two.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{EdgeId, Filtration, VertexId, WeightedGraph};
use crate::rational::Rational;

/// A simplex of dimension at most two, with its filtration value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Simplex {
    pub vertices: Vec<VertexId>,
    pub value: Rational,
}

impl Simplex {
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CxEdge {
    pub u: VertexId,
    pub v: VertexId,
    /// Id of this edge in the source graph.
    pub graph_edge: EdgeId,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CxTriangle {
    pub vertices: [VertexId; 3],
    /// Positions of the three faces in [`FlagComplex2::edges`].
    pub edges: [usize; 3],
    pub value: Rational,
}

/// The flag complex of the subgraph of edges with weight at most `epsilon`.
///
/// Edges and triangles are ordered by filtration value, then by their sorted
/// vertex tuple; those positions index the columns of boundary matrices.
#[derive(Debug, Clone, Serialize)]
pub struct FlagComplex2 {
    pub epsilon: Rational,
    pub n_vertices: usize,
    pub edges: Vec<CxEdge>,
    pub triangles: Vec<CxTriangle>,
    #[serde(skip)]
    edge_index: HashMap<EdgeId, usize>,
    #[serde(skip)]
    triangle_index: HashMap<[VertexId; 3], usize>,
}

pub fn flag_complex_at(g: &WeightedGraph, eps: &Rational) -> FlagComplex2 {
    let mut edges: Vec<CxEdge> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.w <= *eps)
        .map(|(id, e)| CxEdge {
            u: e.u,
            v: e.v,
            graph_edge: id,
            value: e.w,
        })
        .collect();
    edges.sort_by_key(|e| (e.value, e.u, e.v));
    let edge_index: HashMap<EdgeId, usize> = edges
        .iter()
        .enumerate()
        .map(|(i, e)| (e.graph_edge, i))
        .collect();

    // neighbours with larger id, sorted
    let mut up: Vec<Vec<(VertexId, usize)>> = vec![Vec::new(); g.n_vertices()];
    for (i, e) in edges.iter().enumerate() {
        up[e.u].push((e.v, i));
    }
    for list in &mut up {
        list.sort_unstable();
    }

    let mut triangles = Vec::new();
    for (uv, e) in edges.iter().enumerate() {
        let (a, b) = (&up[e.u], &up[e.v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let w = a[i].0;
                    let (uw, vw) = (a[i].1, b[j].1);
                    let value = e.value.max(edges[uw].value).max(edges[vw].value);
                    triangles.push(CxTriangle {
                        vertices: [e.u, e.v, w],
                        edges: [uv, uw, vw],
                        value,
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    triangles.sort_by_key(|t| (t.value, t.vertices));
    let triangle_index = triangles
        .iter()
        .enumerate()
        .map(|(i, t)| (t.vertices, i))
        .collect();

    FlagComplex2 {
        epsilon: *eps,
        n_vertices: g.n_vertices(),
        edges,
        triangles,
        edge_index,
        triangle_index,
    }
}

/// One complex per filtration step, built in parallel.
pub fn complexes_along(f: &Filtration<'_>) -> Vec<FlagComplex2> {
    f.steps()
        .par_iter()
        .map(|eps| flag_complex_at(f.graph(), eps))
        .collect()
}

impl FlagComplex2 {
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    /// Position of a graph edge among this complex's edges.
    pub fn edge_position(&self, graph_edge: EdgeId) -> Option<usize> {
        self.edge_index.get(&graph_edge).copied()
    }

    pub fn triangle_position(&self, mut vertices: [VertexId; 3]) -> Option<usize> {
        vertices.sort_unstable();
        self.triangle_index.get(&vertices).copied()
    }

    /// All simplices ordered by (value, dimension, vertex tuple). Vertices have value 0.
    pub fn simplices(&self) -> Vec<Simplex> {
        let mut out: Vec<Simplex> = (0..self.n_vertices)
            .map(|v| Simplex {
                vertices: vec![v],
                value: Rational::ZERO,
            })
            .collect();
        out.extend(self.edges.iter().map(|e| Simplex {
            vertices: vec![e.u, e.v],
            value: e.value,
        }));
        out.extend(self.triangles.iter().map(|t| Simplex {
            vertices: t.vertices.to_vec(),
            value: t.value,
        }));
        out.sort_by(|a, b| (a.value, a.dim(), &a.vertices).cmp(&(b.value, b.dim(), &b.vertices)));
        out
    }

    pub fn is_subcomplex_of(&self, other: &FlagComplex2) -> bool {
        self.n_vertices <= other.n_vertices
            && self
                .edges
                .iter()
                .all(|e| other.edge_position(e.graph_edge).is_some())
            && self
                .triangles
                .iter()
                .all(|t| other.triangle_position(t.vertices).is_some())
    }

    /// Every face of every triangle is present and indexed consistently.
    pub fn is_face_closed(&self) -> bool {
        self.triangles.iter().all(|t| {
            let [a, b, c] = t.vertices;
            let expect = [(a, b), (a, c), (b, c)];
            t.edges.iter().zip(expect).all(|(&i, (x, y))| {
                let e = &self.edges[i];
                (e.u, e.v) == (x, y) && e.value <= t.value
            })
        })
    }
}
