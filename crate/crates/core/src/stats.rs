//! Network metrics, correlation coefficients and the two-sample
//! Kolmogorov-Smirnov test used to compare scaffolds.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::randnet::gen_er_null;
use crate::scaffold::Scaffold;

/// How edge weights become path lengths for betweenness and closeness.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthMode {
    /// `1/w`: heavier edges are shorter.
    #[default]
    Inverse,
    /// `w` itself.
    Direct,
    /// Every edge has length 1.
    Hop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Degree,
    Strength,
    Betweenness,
    Closeness,
    Eigenvector,
    Clustering,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::Degree,
        Metric::Strength,
        Metric::Betweenness,
        Metric::Closeness,
        Metric::Eigenvector,
        Metric::Clustering,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Metric::Degree => "degree",
            Metric::Strength => "strength",
            Metric::Betweenness => "betweenness",
            Metric::Closeness => "closeness",
            Metric::Eigenvector => "eigenvector",
            Metric::Clustering => "clustering",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricReport {
    pub degree: Vec<f64>,
    pub strength: Vec<f64>,
    pub betweenness: Vec<f64>,
    pub closeness: Vec<f64>,
    pub eigenvector: Vec<f64>,
    pub clustering: Vec<f64>,
    /// `((u, v), w)` in edge order.
    pub edge_weights: Vec<((usize, usize), f64)>,
}

impl MetricReport {
    pub fn get(&self, m: Metric) -> &[f64] {
        match m {
            Metric::Degree => &self.degree,
            Metric::Strength => &self.strength,
            Metric::Betweenness => &self.betweenness,
            Metric::Closeness => &self.closeness,
            Metric::Eigenvector => &self.eigenvector,
            Metric::Clustering => &self.clustering,
        }
    }
}

/// Relative tolerance under which two path lengths count as equal.
const TIE: f64 = 1e-12;

fn same_length(a: f64, b: f64) -> bool {
    (a - b).abs() <= TIE * a.abs().max(b.abs()).max(1.0)
}

#[derive(PartialEq)]
struct Item(f64, usize);

impl Eq for Item {}

impl PartialOrd for Item {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Item {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

struct SingleSource {
    dist: Vec<Option<f64>>,
    sigma: Vec<f64>,
    preds: Vec<Vec<usize>>,
    order: Vec<usize>,
}

fn dijkstra_counting(adj: &[Vec<(usize, f64)>], s: usize) -> SingleSource {
    let n = adj.len();
    let mut dist: Vec<Option<f64>> = vec![None; n];
    let mut sigma = vec![0.0; n];
    let mut preds = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::new();
    let mut heap = BinaryHeap::new();
    dist[s] = Some(0.0);
    sigma[s] = 1.0;
    heap.push(Item(0.0, s));
    while let Some(Item(d, u)) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        order.push(u);
        for &(v, len) in &adj[u] {
            if done[v] {
                continue;
            }
            let nd = d + len;
            match dist[v] {
                Some(old) if same_length(nd, old) => {
                    sigma[v] += sigma[u];
                    preds[v].push(u);
                }
                Some(old) if nd > old => {}
                _ => {
                    dist[v] = Some(nd);
                    sigma[v] = sigma[u];
                    preds[v] = vec![u];
                    heap.push(Item(nd, v));
                }
            }
        }
    }
    SingleSource {
        dist,
        sigma,
        preds,
        order,
    }
}

fn length_adjacency(g: &WeightedGraph, mode: LengthMode) -> Vec<Vec<(usize, f64)>> {
    let mut adj = vec![Vec::new(); g.n_vertices()];
    for e in g.edges() {
        let w = e.w.to_f64();
        let len = match mode {
            LengthMode::Inverse => 1.0 / w,
            LengthMode::Direct => w,
            LengthMode::Hop => 1.0,
        };
        adj[e.u].push((e.v, len));
        adj[e.v].push((e.u, len));
    }
    adj
}

/// Unnormalized betweenness (each unordered pair counted once) and closeness
/// `(r - 1) / Σ d` over the `r` vertices reachable from each vertex.
fn betweenness_closeness(adj: &[Vec<(usize, f64)>]) -> (Vec<f64>, Vec<f64>) {
    let n = adj.len();
    let mut bc = vec![0.0; n];
    let mut cl = vec![0.0; n];
    for (s, closeness) in cl.iter_mut().enumerate() {
        let ss = dijkstra_counting(adj, s);
        let total: f64 = ss.dist.iter().flatten().sum();
        let reached = ss.order.len();
        if reached > 1 && total > 0.0 {
            *closeness = (reached - 1) as f64 / total;
        }
        let mut delta = vec![0.0; n];
        for &w in ss.order.iter().rev() {
            for &v in &ss.preds[w] {
                delta[v] += ss.sigma[v] / ss.sigma[w] * (1.0 + delta[w]);
            }
            if w != s {
                bc[w] += delta[w];
            }
        }
    }
    for b in &mut bc {
        *b /= 2.0;
    }
    (bc, cl)
}

/// Principal eigenvector of the weighted adjacency by power iteration on
/// `A + I` (same eigenvectors, no oscillation on bipartite graphs).
fn eigenvector_centrality(g: &WeightedGraph) -> Vec<f64> {
    let n = g.n_vertices();
    if n == 0 {
        return Vec::new();
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    for _ in 0..100_000 {
        let mut y = x.clone();
        for e in g.edges() {
            let w = e.w.to_f64();
            y[e.u] += w * x[e.v];
            y[e.v] += w * x[e.u];
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in &mut y {
            *v /= norm;
        }
        let diff = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        x = y;
        if diff < 1e-10 {
            break;
        }
    }
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    x.iter().map(|v| v.max(0.0)).collect()
}

/// Onnela weighted clustering: geometric mean of the normalized weights of
/// each triangle at a vertex, over `k(k-1)/2` neighbour pairs.
fn clustering(g: &WeightedGraph) -> Vec<f64> {
    let n = g.n_vertices();
    let max = g.max_weight().map(|w| w.to_f64()).unwrap_or(1.0);
    let mut nbrs: Vec<BTreeMap<usize, f64>> = vec![BTreeMap::new(); n];
    for e in g.edges() {
        let w = e.w.to_f64() / max;
        nbrs[e.u].insert(e.v, w);
        nbrs[e.v].insert(e.u, w);
    }
    (0..n)
        .map(|i| {
            let k = nbrs[i].len();
            if k < 2 {
                return 0.0;
            }
            let list: Vec<(usize, f64)> = nbrs[i].iter().map(|(&j, &w)| (j, w)).collect();
            let mut sum = 0.0;
            for (a, &(j, wij)) in list.iter().enumerate() {
                for &(l, wil) in &list[a + 1..] {
                    if let Some(&wjl) = nbrs[j].get(&l) {
                        sum += (wij * wil * wjl).cbrt();
                    }
                }
            }
            2.0 * sum / (k * (k - 1)) as f64
        })
        .collect()
}

pub fn graph_metrics(g: &WeightedGraph, mode: LengthMode) -> MetricReport {
    let n = g.n_vertices();
    let mut degree = vec![0.0; n];
    let mut strength = vec![0.0; n];
    for e in g.edges() {
        let w = e.w.to_f64();
        degree[e.u] += 1.0;
        degree[e.v] += 1.0;
        strength[e.u] += w;
        strength[e.v] += w;
    }
    let (betweenness, closeness) = betweenness_closeness(&length_adjacency(g, mode));
    MetricReport {
        degree,
        strength,
        betweenness,
        closeness,
        eigenvector: eigenvector_centrality(g),
        clustering: clustering(g),
        edge_weights: g
            .edges()
            .iter()
            .map(|e| ((e.u, e.v), e.w.to_f64()))
            .collect(),
    }
}

pub fn scaffold_metrics(s: &Scaffold, mode: LengthMode) -> MetricReport {
    graph_metrics(&s.to_graph(), mode)
}

/// Pearson correlation; `None` for fewer than two points or a constant input.
pub fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    assert_eq!(x.len(), y.len(), "correlation of unequal lengths");
    let n = x.len();
    if n < 2 {
        return None;
    }
    let mx = x.iter().sum::<f64>() / n as f64;
    let my = y.iter().sum::<f64>() / n as f64;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Ranks starting at 1, ties sharing the mean of their positions.
pub fn mid_ranks(x: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..x.len()).collect();
    idx.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    let mut ranks = vec![0.0; x.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && x[idx[j + 1]] == x[idx[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = r;
        }
        i = j + 1;
    }
    ranks
}

pub fn spearman(x: &[f64], y: &[f64]) -> Option<f64> {
    pearson(&mid_ranks(x), &mid_ranks(y))
}

/// Survival function of the Kolmogorov distribution.
pub fn kolmogorov_sf(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for k in 1..=200 {
        let term = (-2.0 * (k * k) as f64 * lambda * lambda).exp();
        sum += if k % 2 == 1 { term } else { -term };
        if term < 1e-17 {
            break;
        }
    }
    (2.0 * sum).clamp(0.0, 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
}

impl KsResult {
    pub fn inconclusive(&self) -> bool {
        self.p_value > 0.05
    }
}

/// Two-sample KS test with the asymptotic p-value at `λ = √n_eff · D`.
pub fn ks_two_sample(x: &[f64], y: &[f64]) -> Result<KsResult> {
    if x.is_empty() || y.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut a = x.to_vec();
    let mut b = y.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    let (n, m) = (a.len(), b.len());
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < n && j < m {
        let v = a[i].min(b[j]);
        while i < n && a[i] == v {
            i += 1;
        }
        while j < m && b[j] == v {
            j += 1;
        }
        d = d.max((i as f64 / n as f64 - j as f64 / m as f64).abs());
    }
    let n_eff = (n * m) as f64 / (n + m) as f64;
    let p_value = if d == 0.0 {
        1.0
    } else {
        kolmogorov_sf(n_eff.sqrt() * d)
    };
    Ok(KsResult {
        statistic: d,
        p_value,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricComparison {
    pub metric: Metric,
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    pub ks_statistic: f64,
    pub ks_p_value: f64,
    pub ks_inconclusive: bool,
    /// First scaffold against the second scaffold's null.
    pub null_a_pearson: Option<f64>,
    pub null_a_spearman: Option<f64>,
    pub null_a_ks_inconclusive: bool,
    /// Second scaffold against the first scaffold's null.
    pub null_b_pearson: Option<f64>,
    pub null_b_spearman: Option<f64>,
    pub null_b_ks_inconclusive: bool,
}

/// Edge weights aligned on the edges both graphs share, and on the union
/// with absent edges counted as zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeWeightComparison {
    pub n_intersection: usize,
    pub n_union: usize,
    pub intersection_pearson: Option<f64>,
    pub intersection_spearman: Option<f64>,
    pub union_pearson: Option<f64>,
    pub union_spearman: Option<f64>,
    pub ks_statistic: Option<f64>,
    pub ks_p_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub metrics: Vec<MetricComparison>,
    pub edge_weights: EdgeWeightComparison,
}

impl ComparisonReport {
    pub fn metric(&self, m: Metric) -> &MetricComparison {
        self.metrics
            .iter()
            .find(|c| c.metric == m)
            .expect("every metric is reported")
    }
}

fn compare_edge_weights(a: &MetricReport, b: &MetricReport) -> EdgeWeightComparison {
    let wa: BTreeMap<(usize, usize), f64> = a.edge_weights.iter().copied().collect();
    let wb: BTreeMap<(usize, usize), f64> = b.edge_weights.iter().copied().collect();
    let (mut ix, mut iy) = (Vec::new(), Vec::new());
    for (k, &x) in &wa {
        if let Some(&y) = wb.get(k) {
            ix.push(x);
            iy.push(y);
        }
    }
    let mut keys: Vec<_> = wa.keys().chain(wb.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let ux: Vec<f64> = keys
        .iter()
        .map(|k| wa.get(k).copied().unwrap_or(0.0))
        .collect();
    let uy: Vec<f64> = keys
        .iter()
        .map(|k| wb.get(k).copied().unwrap_or(0.0))
        .collect();
    let xs: Vec<f64> = wa.values().copied().collect();
    let ys: Vec<f64> = wb.values().copied().collect();
    let ks = ks_two_sample(&xs, &ys).ok();
    EdgeWeightComparison {
        n_intersection: ix.len(),
        n_union: keys.len(),
        intersection_pearson: pearson(&ix, &iy),
        intersection_spearman: spearman(&ix, &iy),
        union_pearson: pearson(&ux, &uy),
        union_spearman: spearman(&ux, &uy),
        ks_statistic: ks.map(|k| k.statistic),
        ks_p_value: ks.map(|k| k.p_value),
    }
}

/// Compares `a` with `b` metric by metric. `nulls.0` is a null model of `b`
/// and is compared against `a`; `nulls.1` is a null model of `a` and is
/// compared against `b`.
pub fn compare_graphs(
    a: &WeightedGraph,
    b: &WeightedGraph,
    nulls: (&WeightedGraph, &WeightedGraph),
    mode: LengthMode,
) -> Result<ComparisonReport> {
    let n = a.n_vertices();
    for other in [b, nulls.0, nulls.1] {
        if other.n_vertices() != n {
            return Err(Error::VertexSetMismatch(n, other.n_vertices()));
        }
    }
    let (ma, mb) = (graph_metrics(a, mode), graph_metrics(b, mode));
    let (na, nb) = (graph_metrics(nulls.0, mode), graph_metrics(nulls.1, mode));
    let ks = |x: &[f64], y: &[f64]| {
        ks_two_sample(x, y).unwrap_or(KsResult {
            statistic: 0.0,
            p_value: 1.0,
        })
    };
    let metrics = Metric::ALL
        .iter()
        .map(|&m| {
            let (x, y) = (ma.get(m), mb.get(m));
            let k = ks(x, y);
            MetricComparison {
                metric: m,
                pearson: pearson(x, y),
                spearman: spearman(x, y),
                ks_statistic: k.statistic,
                ks_p_value: k.p_value,
                ks_inconclusive: k.inconclusive(),
                null_a_pearson: pearson(x, na.get(m)),
                null_a_spearman: spearman(x, na.get(m)),
                null_a_ks_inconclusive: ks(x, na.get(m)).inconclusive(),
                null_b_pearson: pearson(y, nb.get(m)),
                null_b_spearman: spearman(y, nb.get(m)),
                null_b_ks_inconclusive: ks(y, nb.get(m)).inconclusive(),
            }
        })
        .collect();
    Ok(ComparisonReport {
        metrics,
        edge_weights: compare_edge_weights(&ma, &mb),
    })
}

/// Erdős-Rényi nulls with the edge counts of `a` and `b`, in that order.
pub fn matched_nulls(
    a: &Scaffold,
    b: &Scaffold,
    seed: u64,
) -> Result<(WeightedGraph, WeightedGraph)> {
    Ok((
        gen_er_null(a.n_vertices, a.n_edges(), seed)?,
        gen_er_null(b.n_vertices, b.n_edges(), seed.wrapping_add(1))?,
    ))
}

/// Compares two scaffolds against crossed null models: `a` against a null
/// of `b` and `b` against a null of `a`.
pub fn compare_scaffolds(a: &Scaffold, b: &Scaffold, seed: u64) -> Result<ComparisonReport> {
    if a.n_vertices != b.n_vertices {
        return Err(Error::VertexSetMismatch(a.n_vertices, b.n_vertices));
    }
    let (null_of_a, null_of_b) = matched_nulls(a, b, seed)?;
    compare_graphs(
        &a.to_graph(),
        &b.to_graph(),
        (&null_of_b, &null_of_a),
        LengthMode::Inverse,
    )
}

/// Averages over a sample of comparisons, skipping undefined correlations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricSummary {
    pub metric: Metric,
    pub instances: usize,
    pub mean_pearson: Option<f64>,
    pub mean_spearman: Option<f64>,
    pub mean_null_pearson: Option<f64>,
    pub mean_null_spearman: Option<f64>,
    pub ks_inconclusive_fraction: f64,
    pub null_ks_inconclusive_fraction: f64,
}

fn mean(v: impl Iterator<Item = Option<f64>>) -> Option<f64> {
    let xs: Vec<f64> = v.flatten().collect();
    (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64)
}

pub fn summarize(reports: &[ComparisonReport]) -> Vec<MetricSummary> {
    Metric::ALL
        .iter()
        .map(|&m| {
            let cs: Vec<&MetricComparison> = reports.iter().map(|r| r.metric(m)).collect();
            let k = cs.len().max(1) as f64;
            MetricSummary {
                metric: m,
                instances: cs.len(),
                mean_pearson: mean(cs.iter().map(|c| c.pearson)),
                mean_spearman: mean(cs.iter().map(|c| c.spearman)),
                mean_null_pearson: mean(
                    cs.iter().flat_map(|c| [c.null_a_pearson, c.null_b_pearson]),
                ),
                mean_null_spearman: mean(
                    cs.iter()
                        .flat_map(|c| [c.null_a_spearman, c.null_b_spearman]),
                ),
                ks_inconclusive_fraction: cs.iter().filter(|c| c.ks_inconclusive).count() as f64
                    / k,
                null_ks_inconclusive_fraction: cs
                    .iter()
                    .map(|c| c.null_a_ks_inconclusive as usize + c.null_b_ks_inconclusive as usize)
                    .sum::<usize>() as f64
                    / (2.0 * k),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(n: usize, edges: &[(usize, usize)]) -> WeightedGraph {
        WeightedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, Rational::ONE))).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn path_betweenness() {
        let m = graph_metrics(&unit(3, &[(0, 1), (1, 2)]), LengthMode::Inverse);
        assert_eq!(m.betweenness, vec![0.0, 1.0, 0.0]);
        assert_eq!(m.degree, vec![1.0, 2.0, 1.0]);
        assert!(close(m.closeness[1], 1.0) && close(m.closeness[0], 2.0 / 3.0));
    }

    #[test]
    fn tied_paths_split_betweenness() {
        // square: each opposite pair has two shortest paths
        let m = graph_metrics(&unit(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]), LengthMode::Hop);
        assert!(m.betweenness.iter().all(|&b| close(b, 0.5)));
    }

    #[test]
    fn cycle_betweenness_is_uniform() {
        let edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        let m = graph_metrics(&unit(7, &edges), LengthMode::Inverse);
        assert!(m.betweenness.iter().all(|&b| close(b, m.betweenness[0])));
        assert!(m.betweenness[0] > 0.0);
    }

    #[test]
    fn triangle_clustering_and_isolated_vertices() {
        let m = graph_metrics(&unit(4, &[(0, 1), (1, 2), (0, 2)]), LengthMode::Inverse);
        assert!(m.clustering[..3].iter().all(|&c| close(c, 1.0)));
        assert_eq!(m.clustering[3], 0.0);
        assert_eq!(m.closeness[3], 0.0);
    }

    #[test]
    fn star_eigenvector() {
        // star K_{1,4}: hub component 1/√2, leaves 1/(2√2)
        let m = graph_metrics(
            &unit(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            LengthMode::Inverse,
        );
        let h = 1.0 / 2f64.sqrt();
        assert!((m.eigenvector[0] - h).abs() < 1e-8);
        assert!(m.eigenvector[1..]
            .iter()
            .all(|&x| (x - h / 2.0).abs() < 1e-8));
        let norm: f64 = m.eigenvector.iter().map(|x| x * x).sum();
        assert!(close(norm, 1.0));
    }

    #[test]
    fn correlations() {
        let x = [1.0, 2.0, 3.0];
        assert!(close(pearson(&x, &x).unwrap(), 1.0));
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert!(close(pearson(&x, &neg).unwrap(), -1.0));
        assert!(close(spearman(&x, &neg).unwrap(), -1.0));
        let y = [1.0, 4.0, 9.0];
        assert!(close(spearman(&x, &y).unwrap(), 1.0));
        // means 2 and 14/3; Sxy = 8, Sxx = 2, Syy = 98/3
        let expect = 8.0 / (2f64.sqrt() * (98.0f64 / 3.0).sqrt());
        assert!(close(pearson(&x, &y).unwrap(), expect));
        assert!((pearson(&x, &y).unwrap() - 0.9897).abs() < 1e-4);
        assert_eq!(pearson(&x, &[2.0, 2.0, 2.0]), None);
        assert_eq!(pearson(&[1.0], &[1.0]), None);
        assert_eq!(mid_ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
    }

    #[test]
    fn correlation_invariances() {
        let mut r = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let x: Vec<f64> = (0..20).map(|_| r.random()).collect();
            let y: Vec<f64> = (0..20).map(|_| r.random()).collect();
            let p = pearson(&x, &y).unwrap();
            assert!(close(p, pearson(&y, &x).unwrap()));
            let ax: Vec<f64> = x.iter().map(|v| 3.0 * v + 7.0).collect();
            assert!(close(p, pearson(&ax, &y).unwrap()));
            let s = spearman(&x, &y).unwrap();
            let ex: Vec<f64> = x.iter().map(|v| v.exp()).collect();
            assert!(close(s, spearman(&ex, &y).unwrap()));
            assert!((-1.0..=1.0).contains(&p) && (-1.0..=1.0).contains(&s));
        }
    }

    #[test]
    fn ks_basics() {
        let x = [0.1, 0.5, 0.3, 0.9];
        let same = ks_two_sample(&x, &x).unwrap();
        assert_eq!((same.statistic, same.p_value), (0.0, 1.0));
        let far: Vec<f64> = x.iter().map(|v| v + 10.0).collect();
        assert_eq!(ks_two_sample(&x, &far).unwrap().statistic, 1.0);
        assert!(matches!(ks_two_sample(&[], &x), Err(Error::EmptySample)));
        // known value of the Kolmogorov survival function
        assert!((kolmogorov_sf(1.36) - 0.0494).abs() < 1e-3);
    }

    #[test]
    fn ks_calibration_on_uniform_samples() {
        let mut r = ChaCha8Rng::seed_from_u64(1);
        let mut inconclusive = 0;
        for _ in 0..100 {
            let x: Vec<f64> = (0..100).map(|_| r.random()).collect();
            let y: Vec<f64> = (0..100).map(|_| r.random()).collect();
            let k = ks_two_sample(&x, &y).unwrap();
            assert!((0.0..=1.0).contains(&k.statistic) && (0.0..=1.0).contains(&k.p_value));
            inconclusive += k.inconclusive() as usize;
        }
        assert!(inconclusive >= 90, "{inconclusive}");
    }

    #[test]
    fn comparing_a_graph_with_itself() {
        let g = crate::randnet::gen_rgg(25, 0.35, 2, 4).unwrap();
        let nulls = (
            gen_er_null(25, g.n_edges(), 1).unwrap(),
            gen_er_null(25, g.n_edges(), 2).unwrap(),
        );
        let rep = compare_graphs(&g, &g, (&nulls.0, &nulls.1), LengthMode::Inverse).unwrap();
        for c in &rep.metrics {
            if let Some(p) = c.pearson {
                assert!(close(p, 1.0), "{:?}", c.metric);
            }
            assert!(c.ks_inconclusive);
        }
        assert!(close(rep.edge_weights.intersection_pearson.unwrap(), 1.0));
        assert_eq!(rep.edge_weights.n_intersection, g.n_edges());
        let small = unit(3, &[(0, 1)]);
        assert!(matches!(
            compare_graphs(&g, &small, (&g, &g), LengthMode::Inverse),
            Err(Error::VertexSetMismatch(..))
        ));
    }

    #[test]
    fn null_baseline_is_near_zero() {
        let mut acc = 0.0;
        let mut count = 0;
        for seed in 0..30 {
            let g = crate::randnet::gen_rgg(30, 0.3, 2, seed).unwrap();
            let null = gen_er_null(30, g.n_edges(), seed + 1000).unwrap();
            let (a, b) = (
                graph_metrics(&g, LengthMode::Hop),
                graph_metrics(&null, LengthMode::Hop),
            );
            if let Some(p) = pearson(&a.degree, &b.degree) {
                acc += p;
                count += 1;
            }
        }
        assert!((acc / count as f64).abs() < 0.2);
    }
}
