//! Homological scaffolds: edge weights counting how often each edge lies on
//! a representative cycle, aggregated over the filtration.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::flag_complex_at;
use crate::error::{Error, Result};
use crate::graph::{Filtration, VertexId, WeightedGraph};
use crate::minbasis::{min_basis_with_draws_lengths, MinimalBasisWithDraws};
use crate::persistence::compute_persistence;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Loose,
    Minimal,
    MinimalWithDraws,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Loose => "loose",
            Provenance::Minimal => "minimal",
            Provenance::MinimalWithDraws => "minimal_with_draws",
        }
    }
}

/// Whether never-dying classes contribute a generator to the loose scaffold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Essential {
    #[default]
    Include,
    Exclude,
}

/// Which weights measure cycle length in minimal bases.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MuWeights {
    /// The (possibly reoriented) weights driving the filtration.
    #[default]
    Filtration,
    /// Weights of a separately supplied graph with the same edges.
    Original,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scaffold {
    pub n_vertices: usize,
    /// Keys are `(u, v)` with `u < v`; only positive weights are stored.
    pub edge_weights: BTreeMap<(VertexId, VertexId), Rational>,
    pub provenance: Provenance,
    pub pathology_events: usize,
}

impl Scaffold {
    pub fn empty(n_vertices: usize, provenance: Provenance) -> Self {
        Scaffold {
            n_vertices,
            edge_weights: BTreeMap::new(),
            provenance,
            pathology_events: 0,
        }
    }

    pub fn n_edges(&self) -> usize {
        self.edge_weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_weights.is_empty()
    }

    pub fn weight(&self, u: VertexId, v: VertexId) -> Rational {
        self.edge_weights
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(Rational::ZERO)
    }

    pub fn total_weight(&self) -> Rational {
        self.edge_weights.values().copied().sum()
    }

    fn add(&mut self, u: VertexId, v: VertexId, w: Rational) {
        *self
            .edge_weights
            .entry((u.min(v), u.max(v)))
            .or_insert(Rational::ZERO) += w;
    }

    /// The scaffold as a weighted graph on the same vertex set.
    pub fn to_graph(&self) -> WeightedGraph {
        WeightedGraph::new(
            self.n_vertices,
            self.edge_weights.iter().map(|(&(u, v), &w)| (u, v, w)),
        )
        .expect("scaffold edges are valid")
    }
}

/// Counts, for every edge, the persistence generators passing through it.
pub fn loose_scaffold(f: &Filtration<'_>, essential: Essential) -> Scaffold {
    let g = f.graph();
    let mut s = Scaffold::empty(g.n_vertices(), Provenance::Loose);
    for pair in compute_persistence(f).dim(1) {
        if pair.is_essential() && essential == Essential::Exclude {
            continue;
        }
        if let Some(c) = &pair.generator {
            for &e in &c.edges {
                let edge = g.edge(e);
                s.add(edge.u, edge.v, Rational::ONE);
            }
        }
    }
    s
}

/// Minimal bases of every filtration step.
#[derive(Debug, Clone, Serialize)]
pub struct StepBases {
    pub steps: Vec<(Rational, MinimalBasisWithDraws)>,
    pub n_vertices: usize,
    #[serde(skip)]
    endpoints: Vec<(VertexId, VertexId)>,
}

#[derive(Debug, Clone, Default)]
pub struct MinimalOptions {
    /// Cycle lengths indexed by edge id; `None` uses the filtration weights.
    pub lengths: Option<Vec<Rational>>,
    /// Worker threads; `None` uses the global pool.
    pub parallelism: Option<usize>,
}

impl MinimalOptions {
    pub fn with_parallelism(mut self, n: usize) -> Self {
        self.parallelism = Some(n);
        self
    }

    /// Measure cycles by the weights of `original`, which must have the same edges.
    pub fn with_original_lengths(mut self, original: &WeightedGraph) -> Self {
        self.lengths = Some(original.weights().copied().collect());
        self
    }
}

/// Computes a minimal basis with draws at every step, in parallel over steps.
pub fn step_bases(f: &Filtration<'_>, opts: &MinimalOptions) -> Result<StepBases> {
    let g = f.graph();
    let lengths = match &opts.lengths {
        Some(l) if l.len() != g.n_edges() => {
            return Err(Error::InvalidParameter(format!(
                "{} lengths for {} edges",
                l.len(),
                g.n_edges()
            )))
        }
        Some(l) => l.clone(),
        None => g.weights().copied().collect(),
    };
    if lengths.iter().any(Rational::is_negative) {
        return Err(Error::InvalidParameter("negative cycle length".into()));
    }
    let run = || -> Result<Vec<_>> {
        f.steps()
            .par_iter()
            .map(|eps| {
                Ok((
                    *eps,
                    min_basis_with_draws_lengths(&flag_complex_at(g, eps), &lengths)?,
                ))
            })
            .collect()
    };
    let steps = match opts.parallelism {
        Some(n) => {
            if n == 0 {
                return Err(Error::InvalidParameter(
                    "parallelism must be at least 1".into(),
                ));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::InvalidParameter(e.to_string()))?;
            pool.install(run)?
        }
        None => run()?,
    };
    let endpoints = g.edges().iter().map(|e| (e.u, e.v)).collect();
    Ok(StepBases {
        steps,
        n_vertices: g.n_vertices(),
        endpoints,
    })
}

impl StepBases {
    pub fn beta1_profile(&self) -> Vec<(Rational, usize)> {
        self.steps
            .iter()
            .map(|(eps, b)| (*eps, b.beta1()))
            .collect()
    }

    pub fn pathology_events(&self) -> usize {
        self.steps.iter().map(|(_, b)| b.pathologies.len()).sum()
    }

    /// Number of variant sets by size.
    pub fn variant_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for (_, b) in &self.steps {
            for v in &b.variant_sets {
                *h.entry(v.len()).or_insert(0) += 1;
            }
        }
        h
    }

    /// Counts each step's canonical representatives.
    pub fn minimal(&self) -> Scaffold {
        let mut s = Scaffold::empty(self.n_vertices, Provenance::Minimal);
        s.pathology_events = self.pathology_events();
        for (_, b) in &self.steps {
            for c in b.representatives() {
                for &e in &c.edges {
                    let (u, v) = self.endpoints[e];
                    s.add(u, v, Rational::ONE);
                }
            }
        }
        s
    }

    /// Every variant contributes `1/|V|` of its set's unit weight.
    pub fn minimal_with_draws(&self) -> Scaffold {
        let mut s = Scaffold::empty(self.n_vertices, Provenance::MinimalWithDraws);
        s.pathology_events = self.pathology_events();
        for (_, b) in &self.steps {
            for v in &b.variant_sets {
                let share = Rational::new(1, v.len() as i128);
                for c in &v.cycles {
                    for &e in &c.edges {
                        let (a, b) = self.endpoints[e];
                        s.add(a, b, share);
                    }
                }
            }
        }
        s
    }
}

pub fn minimal_scaffold(f: &Filtration<'_>) -> Result<Scaffold> {
    Ok(step_bases(f, &MinimalOptions::default())?.minimal())
}

pub fn minimal_scaffold_with_draws(f: &Filtration<'_>) -> Result<Scaffold> {
    Ok(step_bases(f, &MinimalOptions::default())?.minimal_with_draws())
}

/// Sum of incident scaffold weights, for every vertex.
pub fn node_strength(s: &Scaffold) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; s.n_vertices];
    for (&(u, v), &w) in &s.edge_weights {
        out[u] += w;
        out[v] += w;
    }
    out
}

/// Mean strength over all vertices of the scaffold's graph.
pub fn mean_strength(s: &Scaffold) -> Rational {
    if s.n_vertices == 0 {
        return Rational::ZERO;
    }
    node_strength(s).into_iter().sum::<Rational>() / Rational::from_integer(s.n_vertices as i128)
}

/// Vertices by strength relative to the mean, descending; ties by vertex id.
pub fn rank_nodes(s: &Scaffold) -> Result<Vec<(VertexId, f64)>> {
    if s.is_empty() {
        return Err(Error::EmptyScaffold);
    }
    let mean = mean_strength(s);
    let mut ranked: Vec<(VertexId, Rational)> = node_strength(s)
        .into_iter()
        .enumerate()
        .map(|(v, st)| (v, st / mean))
        .collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    Ok(ranked.into_iter().map(|(v, r)| (v, r.to_f64())).collect())
}
