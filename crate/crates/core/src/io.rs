//! File formats: scaffold and barcode CSV, benchmark CSV, JSON reports.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::persistence::Barcode;
use crate::rational::Rational;
use crate::scaffold::{mean_strength, rank_nodes, Provenance, Scaffold, StepBases};
use crate::stats::{ComparisonReport, Metric, MetricComparison};

#[derive(Debug, Serialize, Deserialize)]
struct ScaffoldRow {
    u: VertexId,
    v: VertexId,
    weight_decimal: String,
    weight_num: i128,
    weight_den: i128,
}

/// `u,v,weight_decimal,weight_num,weight_den`, one row per support edge.
pub fn write_scaffold_csv(s: &Scaffold) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for (&(u, v), weight) in &s.edge_weights {
        w.serialize(ScaffoldRow {
            u,
            v,
            weight_decimal: weight.to_decimal_string(),
            weight_num: weight.numer(),
            weight_den: weight.denom(),
        })?;
    }
    into_string(w)
}

fn into_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })
}

/// Reads a scaffold CSV; the fraction columns are authoritative and must
/// agree with the decimal column.
pub fn read_scaffold_csv(
    text: &str,
    n_vertices: usize,
    provenance: Provenance,
) -> Result<Scaffold> {
    let mut s = Scaffold::empty(n_vertices, provenance);
    let mut r = csv::Reader::from_reader(text.as_bytes());
    for (i, row) in r.deserialize::<ScaffoldRow>().enumerate() {
        let line = i + 2;
        let row = row?;
        if row.weight_den <= 0 {
            return Err(Error::Parse {
                line,
                msg: "non-positive denominator".into(),
            });
        }
        let w = Rational::new(row.weight_num, row.weight_den);
        let dec: f64 = row.weight_decimal.parse().map_err(|_| Error::Parse {
            line,
            msg: "bad decimal".into(),
        })?;
        if (dec - w.to_f64()).abs() > 1e-12 * w.to_f64().abs().max(1.0) {
            return Err(Error::Parse {
                line,
                msg: format!("decimal {} disagrees with {w}", row.weight_decimal),
            });
        }
        if row.u >= row.v || row.v >= n_vertices {
            return Err(Error::Parse {
                line,
                msg: format!("bad edge ({}, {})", row.u, row.v),
            });
        }
        if w <= Rational::ZERO {
            return Err(Error::Parse {
                line,
                msg: "weights must be positive".into(),
            });
        }
        s.edge_weights.insert((row.u, row.v), w);
    }
    Ok(s)
}

/// `dim,birth,death` with `inf` for classes that never die.
pub fn write_barcode_csv(b: &Barcode) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["dim", "birth", "death"])?;
    for p in &b.pairs {
        let death = p.death.map_or("inf".to_string(), |d| d.to_decimal_string());
        w.write_record([p.dim.to_string(), p.birth.to_decimal_string(), death])?;
    }
    into_string(w)
}

/// Parsed barcode rows `(dim, birth, death)`, `None` for `inf`.
pub fn read_barcode_csv(text: &str) -> Result<Vec<(u8, f64, Option<f64>)>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec?;
        let bad = |msg: &str| Error::Parse {
            line: i + 2,
            msg: msg.to_string(),
        };
        if rec.len() != 3 {
            return Err(bad("expected 3 fields"));
        }
        let dim: u8 = rec[0].parse().map_err(|_| bad("bad dim"))?;
        let birth: f64 = rec[1].parse().map_err(|_| bad("bad birth"))?;
        let death = match &rec[2] {
            "inf" => None,
            d => Some(d.parse().map_err(|_| bad("bad death"))?),
        };
        out.push((dim, birth, death));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepBeta {
    pub epsilon: Rational,
    pub beta1: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedNode {
    pub vertex: VertexId,
    pub label: String,
    pub relative_strength: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaffoldReport {
    pub provenance: Provenance,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub total_weight: Rational,
    pub mean_strength: f64,
    pub pathology_events: usize,
    pub beta1_profile: Vec<StepBeta>,
    /// Variant-set size → count.
    pub variant_histogram: BTreeMap<usize, usize>,
    pub ranking: Vec<RankedNode>,
}

impl ScaffoldReport {
    /// `bases` supplies the β1 profile and variant histogram when available.
    pub fn new(s: &Scaffold, g: &WeightedGraph, bases: Option<&StepBases>) -> Self {
        let ranking = rank_nodes(s)
            .map(|r| {
                r.into_iter()
                    .map(|(v, rel)| RankedNode {
                        vertex: v,
                        label: g.label(v),
                        relative_strength: rel,
                    })
                    .collect()
            })
            .unwrap_or_default();
        ScaffoldReport {
            provenance: s.provenance,
            n_vertices: s.n_vertices,
            n_edges: s.n_edges(),
            total_weight: s.total_weight(),
            mean_strength: mean_strength(s).to_f64(),
            pathology_events: s.pathology_events,
            beta1_profile: bases
                .map(|b| {
                    b.beta1_profile()
                        .into_iter()
                        .map(|(epsilon, beta1)| StepBeta { epsilon, beta1 })
                        .collect()
                })
                .unwrap_or_default(),
            variant_histogram: bases.map(StepBases::variant_histogram).unwrap_or_default(),
            ranking,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub model: String,
    pub n: usize,
    pub k: usize,
    pub p: f64,
    pub seed: u64,
    pub loose_ms: f64,
    pub minimal_ms: f64,
}

pub fn write_bench_csv(rows: &[BenchRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    if rows.is_empty() {
        w.write_record(["model", "n", "k", "p", "seed", "loose_ms", "minimal_ms"])?;
    }
    into_string(w)
}

pub fn read_bench_csv(text: &str) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

pub fn write_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, contents)?;
    Ok(())
}

/// `vertex,label,relative_strength`, strongest first.
pub fn write_ranking_csv(ranking: &[RankedNode]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in ranking {
        w.serialize(r)?;
    }
    if ranking.is_empty() {
        w.write_record(["vertex", "label", "relative_strength"])?;
    }
    into_string(w)
}

pub fn read_ranking_csv(text: &str) -> Result<Vec<RankedNode>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}

/// One comparison of one metric on one instance; empty cells are undefined
/// correlations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub instance: usize,
    pub metric: Metric,
    pub pearson: Option<f64>,
    pub spearman: Option<f64>,
    pub ks_statistic: f64,
    pub ks_p_value: f64,
    pub ks_inconclusive: bool,
    pub null_a_pearson: Option<f64>,
    pub null_a_spearman: Option<f64>,
    pub null_a_ks_inconclusive: bool,
    pub null_b_pearson: Option<f64>,
    pub null_b_spearman: Option<f64>,
    pub null_b_ks_inconclusive: bool,
}

impl ComparisonRow {
    pub fn new(instance: usize, c: &MetricComparison) -> Self {
        ComparisonRow {
            instance,
            metric: c.metric,
            pearson: c.pearson,
            spearman: c.spearman,
            ks_statistic: c.ks_statistic,
            ks_p_value: c.ks_p_value,
            ks_inconclusive: c.ks_inconclusive,
            null_a_pearson: c.null_a_pearson,
            null_a_spearman: c.null_a_spearman,
            null_a_ks_inconclusive: c.null_a_ks_inconclusive,
            null_b_pearson: c.null_b_pearson,
            null_b_spearman: c.null_b_spearman,
            null_b_ks_inconclusive: c.null_b_ks_inconclusive,
        }
    }
}

/// Long-format table of per-instance metric comparisons, for box plots.
pub fn write_comparison_csv(reports: &[ComparisonReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for (i, r) in reports.iter().enumerate() {
        for c in &r.metrics {
            w.serialize(ComparisonRow::new(i, c))?;
        }
    }
    into_string(w)
}

pub fn read_comparison_csv(text: &str) -> Result<Vec<ComparisonRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<std::result::Result<_, _>>()?)
}
