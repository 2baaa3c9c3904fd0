//! Weighted graphs, their text formats, and the threshold filtration.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub w: Rational,
}

/// An undirected graph with exact non-negative edge weights.
///
/// Edges are stored with `u < v` and sorted by `(u, v)`, so an [`EdgeId`] is
/// independent of the order in which edges were supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    n_vertices: usize,
    edges: Vec<Edge>,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
struct Header {
    n_vertices: Option<usize>,
    labels: Option<Vec<String>>,
}

impl WeightedGraph {
    pub fn new(
        n_vertices: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Rational)>,
    ) -> Result<Self> {
        let items: Vec<_> = edges
            .into_iter()
            .enumerate()
            .map(|(i, (u, v, w))| (i + 1, u, v, w))
            .collect();
        Self::from_numbered(Some(n_vertices), items)
    }

    /// `items` carry a source line number used for error reporting.
    fn from_numbered(
        n_vertices: Option<usize>,
        items: Vec<(usize, VertexId, VertexId, Rational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<(VertexId, VertexId), Rational> = BTreeMap::new();
        let mut max_id = None;
        for (line, u, v, w) in items {
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            if w.is_negative() {
                return Err(Error::NegativeWeight {
                    line,
                    weight: w.to_string(),
                });
            }
            let key = (u.min(v), u.max(v));
            max_id = max_id.max(Some(key.1));
            if let Some(prev) = map.insert(key, w) {
                if prev != w {
                    return Err(Error::ConflictingDuplicate {
                        line,
                        u: key.0,
                        v: key.1,
                    });
                }
            }
        }
        let implied = max_id.map_or(0, |m| m + 1);
        let n_vertices = match n_vertices {
            Some(n) if n < implied => {
                return Err(Error::InvalidGraph(format!(
                    "vertex id {} out of range for {} vertices",
                    implied - 1,
                    n
                )))
            }
            Some(n) => n,
            None => implied,
        };
        let edges = map
            .into_iter()
            .map(|((u, v), w)| Edge { u, v, w })
            .collect();
        Ok(WeightedGraph {
            n_vertices,
            edges,
            labels: None,
        })
    }

    /// Complete graph on a point cloud with Euclidean distances as weights.
    pub fn from_points(points: &[Vec<f64>]) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let d = euclidean(&points[i], &points[j]);
                edges.push((i, j, Rational::from_f64(d)?));
            }
        }
        WeightedGraph::new(points.len(), edges)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n_vertices {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n_vertices
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: VertexId) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search_by(|e| (e.u, e.v).cmp(&key)).ok()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Rational> {
        self.edges.iter().map(|e| &e.w)
    }

    pub fn max_weight(&self) -> Option<Rational> {
        self.weights().max().copied()
    }

    /// Same graph with every weight replaced, keeping edge ids.
    pub fn map_weights(&self, mut f: impl FnMut(&Edge) -> Rational) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                w: f(e),
            })
            .collect();
        WeightedGraph {
            n_vertices: self.n_vertices,
            edges,
            labels: self.labels.clone(),
        }
    }

    /// Renames vertex `i` to `perm[i]`. Edge ids change accordingly.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        if perm.len() != self.n_vertices {
            return Err(Error::InvalidParameter(
                "permutation length mismatch".into(),
            ));
        }
        let edges = self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.w));
        let mut g = WeightedGraph::new(self.n_vertices, edges)?;
        if let Some(labels) = &self.labels {
            let mut relabeled = vec![String::new(); self.n_vertices];
            for (i, l) in labels.iter().enumerate() {
                relabeled[perm[i]] = l.clone();
            }
            g.labels = Some(relabeled);
        }
        Ok(g)
    }

    /// Sorted neighbour lists, optionally restricted to edges of weight at most `eps`.
    pub fn adjacency(&self, eps: Option<&Rational>) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for (id, e) in self.edges.iter().enumerate() {
            if eps.is_none_or(|eps| e.w <= *eps) {
                adj[e.u].push((e.v, id));
                adj[e.v].push((e.u, id));
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Canonical `u,v,w` edge list preceded by a JSON header line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let header = match &self.labels {
            Some(labels) => serde_json::json!({ "n_vertices": self.n_vertices, "labels": labels }),
            None => serde_json::json!({ "n_vertices": self.n_vertices }),
        };
        let _ = writeln!(out, "{header}");
        for e in &self.edges {
            let _ = writeln!(out, "{},{},{}", e.u, e.v, e.w.to_decimal_string());
        }
        out
    }
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

fn split_fields(line: &str) -> Vec<&str> {
    line.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect()
}

/// Parses a `u,v,w` edge list. Blank lines and `#` comments are ignored; a
/// first content line starting with `{` is read as a JSON header
/// `{"n_vertices": N, "labels": [...]}`.
pub fn parse_edge_list(text: &str) -> Result<WeightedGraph> {
    let mut header: Option<Header> = None;
    let mut items = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        if header.is_none() && items.is_empty() && raw.trim_start().starts_with('{') {
            header = Some(serde_json::from_str(raw.trim()).map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("bad header: {e}"),
            })?);
            continue;
        }
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let fields = split_fields(line);
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected `u,v,w`, got {:?}", line),
            });
        }
        let id = |s: &str| {
            s.parse::<VertexId>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("bad vertex id {s:?}"),
            })
        };
        let u = id(fields[0])?;
        let v = id(fields[1])?;
        let w: Rational = fields[2].parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad weight {:?}", fields[2]),
        })?;
        items.push((line_no, u, v, w));
    }
    let (n, labels) = match header {
        Some(h) => (
            h.n_vertices.or(h.labels.as_ref().map(|l| l.len())),
            h.labels,
        ),
        None => (None, None),
    };
    let g = WeightedGraph::from_numbered(n, items)?;
    match labels {
        Some(l) => g.with_labels(l),
        None => Ok(g),
    }
}

/// Parses a square symmetric matrix (comma and/or whitespace separated).
/// Zero entries mean "no edge"; the diagonal is ignored.
pub fn parse_adjacency(text: &str) -> Result<WeightedGraph> {
    let mut rows: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let row = split_fields(line)
            .into_iter()
            .map(|s| {
                s.parse::<Rational>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad entry {s:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((idx + 1, row));
    }
    let n = rows.len();
    for (i, (_, row)) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i,
                found: row.len(),
                expected: n,
            });
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = rows[i].1[j];
            let b = rows[j].1[i];
            if (a.to_f64() - b.to_f64()).abs() > 1e-12 {
                return Err(Error::Asymmetric { i, j });
            }
            if a.is_negative() {
                return Err(Error::NegativeWeight {
                    line: rows[i].0,
                    weight: a.to_string(),
                });
            }
            if !a.is_zero() {
                edges.push((rows[i].0, i, j, a));
            }
        }
    }
    WeightedGraph::from_numbered(Some(n), edges)
}

/// Graph from a dense symmetric matrix of non-negative reals; zero means no edge.
pub fn graph_from_matrix(m: &nalgebra::DMatrix<f64>) -> Result<WeightedGraph> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            row: 0,
            found: m.ncols(),
            expected: m.nrows(),
        });
    }
    let n = m.nrows();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 {
                return Err(Error::Asymmetric { i, j });
            }
            let w = Rational::from_f64(m[(i, j)])?;
            if w.is_negative() {
                return Err(Error::NegativeWeight {
                    line: i + 1,
                    weight: m[(i, j)].to_string(),
                });
            }
            if !w.is_zero() {
                edges.push((i, j, w));
            }
        }
    }
    WeightedGraph::new(n, edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Edges enter in increasing weight (distances).
    #[default]
    Ascending,
    /// Edges enter in decreasing weight (affinities); weight becomes `w_max - w`.
    Descending,
}

pub fn orient_filtration(g: &WeightedGraph, direction: Orientation) -> WeightedGraph {
    match direction {
        Orientation::Ascending => g.clone(),
        Orientation::Descending => {
            let max = g.max_weight().unwrap_or(Rational::ZERO);
            g.map_weights(|e| max - e.w)
        }
    }
}

/// The threshold filtration of a weighted graph: one step per distinct weight.
///
/// An empty edge set yields a single degenerate step at 0.
#[derive(Debug, Clone)]
pub struct Filtration<'g> {
    graph: &'g WeightedGraph,
    steps: Vec<Rational>,
}

pub fn build_filtration(g: &WeightedGraph) -> Filtration<'_> {
    let mut steps: Vec<Rational> = g.weights().copied().collect();
    steps.sort_unstable();
    steps.dedup();
    if steps.is_empty() {
        steps.push(Rational::ZERO);
    }
    Filtration { graph: g, steps }
}

impl<'g> Filtration<'g> {
    pub fn graph(&self) -> &'g WeightedGraph {
        self.graph
    }

    pub fn steps(&self) -> &[Rational] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Edge ids present at step `i`.
    pub fn edges_at(&self, i: usize) -> Vec<EdgeId> {
        let eps = &self.steps[i];
        (0..self.graph.n_edges())
            .filter(|&id| self.graph.edge(id).w <= *eps)
            .collect()
    }
}
