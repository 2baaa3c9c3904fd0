//! Minimal 1-homology bases of a flag complex, keeping every equally short
//! homologous variant ("draws").
//!
//! Edges are annotated with vectors in `Z2^β1` so that the homology class of
//! a cycle is the XOR of its edge annotations. Candidate cycles come from
//! shortest-path trees rooted at every vertex, each closed by one non-tree
//! edge. A de Pina style selection then walks the candidates by increasing
//! length, one homology dimension at a time, using support vectors to certify
//! independence from the cycles already chosen.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use serde::Serialize;

use crate::complex::FlagComplex2;
use crate::cycle::Cycle;
use crate::error::Result;
use crate::graph::{EdgeId, VertexId};
use crate::rational::{Rational, TickScale};
use crate::union_find::UnionFind;
use crate::z2::{column_reduce, BitVector, Z2Matrix, Z2Vector};

pub type Annotation = BitVector;

/// Annotation of every edge of a complex, indexed by edge position.
#[derive(Debug, Clone)]
pub struct EdgeAnnotation {
    pub beta1: usize,
    pub edges: Vec<Annotation>,
}

impl EdgeAnnotation {
    /// Class of a chain given by edge positions.
    pub fn of_positions(&self, positions: impl IntoIterator<Item = usize>) -> Annotation {
        let mut a = BitVector::zeros(self.beta1);
        for p in positions {
            a.xor_assign(&self.edges[p]);
        }
        a
    }

    /// Class of a cycle given by graph edge ids. Panics if an edge is not in `cx`.
    pub fn of_cycle(&self, cx: &FlagComplex2, cycle: &Cycle) -> Annotation {
        self.of_positions(
            cycle
                .edges
                .iter()
                .map(|&e| cx.edge_position(e).expect("edge not in complex")),
        )
    }
}

/// Computes `β1` and an annotation of the edges of `cx`.
///
/// Cycles are coordinatized by their non-tree edges with respect to a
/// spanning forest; the boundary space is reduced in those coordinates and
/// the non-pivot rows index a basis of `H_1`.
pub fn annotate_edges(cx: &FlagComplex2) -> EdgeAnnotation {
    let mut uf = UnionFind::new(cx.n_vertices);
    let mut row_of = vec![None; cx.n_edges()];
    let mut n_rows = 0;
    for (i, e) in cx.edges.iter().enumerate() {
        if !uf.union(e.u, e.v) {
            row_of[i] = Some(n_rows);
            n_rows += 1;
        }
    }
    let columns = cx
        .triangles
        .iter()
        .map(|t| Z2Vector::from_indices(t.edges.iter().filter_map(|&e| row_of[e])))
        .collect();
    let red = column_reduce(&Z2Matrix::new(n_rows, columns));

    let mut coord = vec![None; n_rows];
    let mut beta1 = 0;
    for (r, c) in coord.iter_mut().enumerate() {
        if red.pivot_column(r).is_none() {
            *c = Some(beta1);
            beta1 += 1;
        }
    }

    let mut row_ann: Vec<BitVector> = Vec::with_capacity(n_rows);
    for (r, &slot) in coord.iter().enumerate().take(n_rows) {
        let a = match (slot, red.pivot_column(r)) {
            (Some(k), _) => BitVector::unit(beta1, k),
            (None, Some(c)) => {
                // row r is congruent to the rest of its reduced boundary column
                let mut a = BitVector::zeros(beta1);
                for &q in red.reduced.column(c).support() {
                    if q != r {
                        a.xor_assign(&row_ann[q]);
                    }
                }
                a
            }
            (None, None) => unreachable!(),
        };
        row_ann.push(a);
    }

    let edges = row_of
        .iter()
        .map(|r| match r {
            Some(r) => row_ann[*r].clone(),
            None => BitVector::zeros(beta1),
        })
        .collect();
    EdgeAnnotation { beta1, edges }
}

struct ShortestPathTree {
    root: VertexId,
    dist: Vec<Option<i128>>,
    /// `(parent vertex, edge position)`
    pred: Vec<Option<(VertexId, usize)>>,
    /// First vertex after the root on the tree path; the root maps to itself.
    branch: Vec<VertexId>,
}

/// Dijkstra on integer ticks. Among equally short routes the predecessor
/// with the smallest vertex id wins.
fn shortest_path_tree(
    adj: &[Vec<(VertexId, usize)>],
    ticks: &[i128],
    root: VertexId,
) -> ShortestPathTree {
    let n = adj.len();
    let mut dist: Vec<Option<i128>> = vec![None; n];
    let mut pred: Vec<Option<(VertexId, usize)>> = vec![None; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();
    dist[root] = Some(0);
    heap.push(Reverse((0i128, root)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] || dist[u] != Some(d) {
            continue;
        }
        done[u] = true;
        order.push(u);
        for &(w, p) in &adj[u] {
            if done[w] {
                continue;
            }
            let nd = d + ticks[p];
            match dist[w] {
                Some(old) if nd > old => {}
                Some(old) if nd == old => {
                    if pred[w].is_some_and(|(pu, _)| u < pu) {
                        pred[w] = Some((u, p));
                    }
                }
                _ => {
                    dist[w] = Some(nd);
                    pred[w] = Some((u, p));
                    heap.push(Reverse((nd, w)));
                }
            }
        }
    }
    let mut branch = vec![root; n];
    for &x in &order {
        if let Some((parent, _)) = pred[x] {
            branch[x] = if parent == root { x } else { branch[parent] };
        }
    }
    ShortestPathTree {
        root,
        dist,
        pred,
        branch,
    }
}

struct CandidateSource<'a> {
    cx: &'a FlagComplex2,
    adj: Vec<Vec<(VertexId, usize)>>,
    ticks: Vec<i128>,
    scale: TickScale,
}

impl<'a> CandidateSource<'a> {
    fn new(cx: &'a FlagComplex2, lengths: &[Rational]) -> Result<Self> {
        let edge_lengths: Vec<Rational> = cx.edges.iter().map(|e| lengths[e.graph_edge]).collect();
        let scale = TickScale::for_values(&edge_lengths)?;
        let ticks = edge_lengths
            .iter()
            .map(|l| scale.ticks(l))
            .collect::<Result<Vec<_>>>()?;
        let mut adj = vec![Vec::new(); cx.n_vertices];
        for (p, e) in cx.edges.iter().enumerate() {
            adj[e.u].push((e.v, p));
            adj[e.v].push((e.u, p));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(CandidateSource {
            cx,
            adj,
            ticks,
            scale,
        })
    }

    /// Calls `emit(length_ticks, tree, a, b, closing_edge_position)` for every
    /// candidate of every root.
    fn for_each(&self, mut emit: impl FnMut(i128, &ShortestPathTree, VertexId, VertexId, usize)) {
        for root in 0..self.cx.n_vertices {
            if self.adj[root].is_empty() {
                continue;
            }
            let spt = shortest_path_tree(&self.adj, &self.ticks, root);
            for (p, e) in self.cx.edges.iter().enumerate() {
                let (a, b) = (e.u, e.v);
                let (Some(da), Some(db)) = (spt.dist[a], spt.dist[b]) else {
                    continue;
                };
                if spt.pred[a].is_some_and(|(_, q)| q == p)
                    || spt.pred[b].is_some_and(|(_, q)| q == p)
                {
                    continue;
                }
                if spt.branch[a] == spt.branch[b] {
                    continue;
                }
                emit(da + db + self.ticks[p], &spt, a, b, p);
            }
        }
    }

    fn cycle_edges(
        &self,
        spt: &ShortestPathTree,
        a: VertexId,
        b: VertexId,
        p: usize,
    ) -> Vec<EdgeId> {
        let mut out = vec![self.cx.edges[p].graph_edge];
        for start in [a, b] {
            let mut x = start;
            while let Some((parent, q)) = spt.pred[x] {
                out.push(self.cx.edges[q].graph_edge);
                x = parent;
            }
        }
        out.sort_unstable();
        out
    }
}

/// Horton-style candidate cycles: for every root, the shortest-path tree
/// closed by each edge whose endpoints lie on different branches.
/// Deduplicated by edge set and sorted by (length, edge set).
pub fn horton_candidates(cx: &FlagComplex2, lengths: &[Rational]) -> Result<Vec<Cycle>> {
    let src = CandidateSource::new(cx, lengths)?;
    let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
    let mut out = Vec::new();
    src.for_each(|ticks, spt, a, b, p| {
        let edges = src.cycle_edges(spt, a, b, p);
        if seen.insert(edges.clone()) {
            out.push(Cycle {
                length_mu: src.scale.to_rational(ticks),
                edges,
            });
        }
    });
    out.sort();
    Ok(out)
}

/// Homologous cycles of identical minimal length; the first is the
/// canonical representative (smallest edge set).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantSet {
    pub cycles: Vec<Cycle>,
    #[serde(skip)]
    pub annotation: Annotation,
}

impl VariantSet {
    pub fn representative(&self) -> &Cycle {
        &self.cycles[0]
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn length_mu(&self) -> Rational {
        self.cycles[0].length_mu
    }
}

/// Equally short candidates in different homology classes competed in one
/// selection round; the canonical one was taken.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathologyEvent {
    pub round: usize,
    pub length_mu: Rational,
    /// Number of distinct homology classes among the tied candidates.
    pub classes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundLog {
    pub round: usize,
    pub length_mu: Rational,
    pub variants: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MinimalBasisWithDraws {
    pub variant_sets: Vec<VariantSet>,
    pub rounds: Vec<RoundLog>,
    pub pathologies: Vec<PathologyEvent>,
}

impl MinimalBasisWithDraws {
    pub fn beta1(&self) -> usize {
        self.variant_sets.len()
    }

    pub fn total_length(&self) -> Rational {
        self.variant_sets.iter().map(VariantSet::length_mu).sum()
    }

    pub fn representatives(&self) -> impl Iterator<Item = &Cycle> {
        self.variant_sets.iter().map(VariantSet::representative)
    }
}

/// Minimal basis with draws, measuring cycles by the complex's own filtration values.
pub fn min_basis_with_draws(cx: &FlagComplex2) -> Result<MinimalBasisWithDraws> {
    let mut lengths =
        vec![Rational::ZERO; cx.edges.iter().map(|e| e.graph_edge + 1).max().unwrap_or(0)];
    for e in &cx.edges {
        lengths[e.graph_edge] = e.value;
    }
    min_basis_with_draws_lengths(cx, &lengths)
}

/// A closing edge of one root's shortest-path tree, before materialization.
#[derive(Clone, Copy)]
struct Record {
    ticks: i128,
    root: u32,
    edge: u32,
}

struct Candidate {
    ticks: i128,
    edges: Vec<EdgeId>,
    annotation: Annotation,
    /// Inner products with the current support vectors; equal for two
    /// candidates exactly when their classes are equal.
    coords: BitVector,
}

/// Yields candidates one length at a time, canonically ordered, deduplicated,
/// with trivial classes removed.
struct LazyCandidates<'a> {
    src: &'a CandidateSource<'a>,
    ann: &'a EdgeAnnotation,
    trees: Vec<ShortestPathTree>,
    records: Vec<Record>,
    next: usize,
}

impl<'a> LazyCandidates<'a> {
    fn new(src: &'a CandidateSource<'a>, ann: &'a EdgeAnnotation) -> Self {
        let mut trees = Vec::new();
        let mut records = Vec::new();
        let mut slot = HashMap::new();
        src.for_each(|ticks, spt, _, _, p| {
            let root = *slot.entry(spt.root).or_insert_with(|| {
                trees.push(ShortestPathTree {
                    root: spt.root,
                    dist: spt.dist.clone(),
                    pred: spt.pred.clone(),
                    branch: spt.branch.clone(),
                });
                trees.len() - 1
            });
            records.push(Record {
                ticks,
                root: root as u32,
                edge: p as u32,
            });
        });
        records.sort_by_key(|r| r.ticks);
        LazyCandidates {
            src,
            ann,
            trees,
            records,
            next: 0,
        }
    }

    fn next_group(&mut self) -> Option<Vec<(i128, Vec<EdgeId>, Annotation)>> {
        let start = self.next;
        let ticks = self.records.get(start)?.ticks;
        let mut end = start;
        while end < self.records.len() && self.records[end].ticks == ticks {
            end += 1;
        }
        self.next = end;
        let mut seen = HashSet::new();
        let mut group = Vec::new();
        for r in &self.records[start..end] {
            let spt = &self.trees[r.root as usize];
            let p = r.edge as usize;
            let e = &self.src.cx.edges[p];
            let mut positions = vec![p];
            for s in [e.u, e.v] {
                let mut x = s;
                while let Some((parent, q)) = spt.pred[x] {
                    positions.push(q);
                    x = parent;
                }
            }
            let mut edges: Vec<EdgeId> = positions
                .iter()
                .map(|&q| self.src.cx.edges[q].graph_edge)
                .collect();
            edges.sort_unstable();
            if !seen.insert(edges.clone()) {
                continue;
            }
            let class = self.ann.of_positions(positions);
            if !class.is_zero() {
                group.push((ticks, edges, class));
            }
        }
        group.sort_by(|a, b| a.1.cmp(&b.1));
        Some(group)
    }
}

/// Minimal basis with draws, with cycle lengths taken from `lengths`
/// (indexed by graph edge id).
pub fn min_basis_with_draws_lengths(
    cx: &FlagComplex2,
    lengths: &[Rational],
) -> Result<MinimalBasisWithDraws> {
    let ann = annotate_edges(cx);
    let beta1 = ann.beta1;
    if beta1 == 0 {
        return Ok(MinimalBasisWithDraws::default());
    }
    let src = CandidateSource::new(cx, lengths)?;
    let mut lazy = LazyCandidates::new(&src, &ann);

    // rows[k] holds bit k of every support vector
    let mut rows: Vec<BitVector> = (0..beta1).map(|i| BitVector::unit(beta1, i)).collect();
    // Sorted, and holding every candidate up to the longest length drawn so
    // far whose coordinates at or above the current round are not all zero.
    let mut live: Vec<Candidate> = Vec::new();
    let mut out = MinimalBasisWithDraws::default();
    for round in 0..beta1 {
        let first = loop {
            if let Some(i) = live.iter().position(|c| c.coords.get(round)) {
                break i;
            }
            let group = lazy.next_group().expect("candidate set spans H_1");
            for (ticks, edges, annotation) in group {
                let mut coords = BitVector::zeros(beta1);
                for k in annotation.ones() {
                    coords.xor_assign(&rows[k]);
                }
                if coords.any_from(round) {
                    live.push(Candidate {
                        ticks,
                        edges,
                        annotation,
                        coords,
                    });
                }
            }
        };
        let best = live[first].ticks;
        let tied: Vec<usize> = (first..live.len())
            .take_while(|&i| live[i].ticks == best)
            .filter(|&i| live[i].coords.get(round))
            .collect();
        let rep = live[first].coords.clone();
        let classes: HashSet<&BitVector> = tied.iter().map(|&i| &live[i].coords).collect();
        let length_mu = src.scale.to_rational(best);
        if classes.len() > 1 {
            out.pathologies.push(PathologyEvent {
                round,
                length_mu,
                classes: classes.len(),
            });
        }
        let cycles: Vec<Cycle> = tied
            .iter()
            .filter(|&&i| live[i].coords == rep)
            .map(|&i| Cycle {
                length_mu,
                edges: live[i].edges.clone(),
            })
            .collect();
        out.rounds.push(RoundLog {
            round,
            length_mu,
            variants: cycles.len(),
        });
        out.variant_sets.push(VariantSet {
            cycles,
            annotation: live[first].annotation.clone(),
        });

        // S_j += S_round for every later j with <A(rep), S_j> = 1
        let mut mask = rep;
        mask.clear_below(round + 1);
        for row in &mut rows {
            if row.get(round) {
                row.xor_assign_from(&mask, round + 1);
            }
        }
        for c in &mut live {
            if c.coords.get(round) {
                c.coords.xor_assign_from(&mask, round + 1);
            }
        }
        live.retain(|c| c.coords.any_from(round + 1));
    }
    Ok(out)
}
