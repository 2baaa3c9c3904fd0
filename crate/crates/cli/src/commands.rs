use std::path::{Path, PathBuf};

use minscaffold::graph::{parse_adjacency, parse_edge_list};
use minscaffold::io::{
    read_scaffold_csv, write_barcode_csv, write_bench_csv, write_comparison_csv, write_file,
    write_json, write_ranking_csv, write_scaffold_csv, ScaffoldReport,
};
use minscaffold::persistence::compute_persistence;
use minscaffold::randnet::{gen_er_null, GeneratorConfig};
use minscaffold::scaffold::{
    loose_scaffold, step_bases, Essential, MinimalOptions, Provenance, Scaffold,
};
use minscaffold::stats::{
    compare_graphs, compare_scaffolds, summarize, ComparisonReport, LengthMode,
};
use minscaffold::{build_filtration, orient_filtration, Error, Orientation, Result, WeightedGraph};

use crate::{
    BenchArgs, Common, CompareArgs, EssentialArg, Format, GenerateArgs, InputArgs, LengthModeArg,
    Model, MuWeightsArg, OrientationArg, PersistenceArgs, ScaffoldArgs, ScaffoldKind,
};

/// Files are collected and written together once everything has been computed.
struct Outputs {
    dir: PathBuf,
    files: Vec<(PathBuf, String)>,
}

impl Outputs {
    fn new(dir: &Path) -> Self {
        Outputs {
            dir: dir.to_path_buf(),
            files: Vec::new(),
        }
    }

    fn add(&mut self, name: &str, contents: String) {
        self.files.push((self.dir.join(name), contents));
    }

    fn write(self) -> Result<Vec<PathBuf>> {
        for (path, contents) in &self.files {
            write_file(path, contents)?;
        }
        Ok(self.files.into_iter().map(|(p, _)| p).collect())
    }
}

fn read_graph(path: &Path, format: Format) -> Result<WeightedGraph> {
    let text = std::fs::read_to_string(path)?;
    match format {
        Format::Edgelist => parse_edge_list(&text),
        Format::Adjacency => parse_adjacency(&text),
    }
}

fn orientation(o: OrientationArg) -> Orientation {
    match o {
        OrientationArg::Asc => Orientation::Ascending,
        OrientationArg::Desc => Orientation::Descending,
    }
}

fn minimal_options(common: &Common) -> MinimalOptions {
    let opts = MinimalOptions::default();
    match common.parallelism {
        Some(n) => opts.with_parallelism(n as usize),
        None => opts,
    }
}

fn load(io: &InputArgs, path: &Path) -> Result<(WeightedGraph, WeightedGraph)> {
    let g = read_graph(path, io.format)?;
    let oriented = orient_filtration(&g, orientation(io.orientation));
    Ok((g, oriented))
}

pub fn scaffold(a: &ScaffoldArgs) -> Result<Vec<PathBuf>> {
    let (g, oriented) = load(&a.io, &a.input)?;
    let f = build_filtration(&oriented);
    let mut out = Outputs::new(&a.common.output);
    out.add("barcode.csv", write_barcode_csv(&compute_persistence(&f))?);

    let mut scaffolds: Vec<(&str, Scaffold)> = Vec::new();
    let mut bases = None;
    if matches!(a.scaffold, ScaffoldKind::Loose | ScaffoldKind::All) {
        let essential = match a.essential {
            EssentialArg::Include => Essential::Include,
            EssentialArg::Exclude => Essential::Exclude,
        };
        scaffolds.push(("loose", loose_scaffold(&f, essential)));
    }
    if a.scaffold != ScaffoldKind::Loose {
        let mut opts = minimal_options(&a.common);
        if a.mu_weights == MuWeightsArg::Original {
            opts = opts.with_original_lengths(&g);
        }
        let b = step_bases(&f, &opts)?;
        if matches!(a.scaffold, ScaffoldKind::Minimal | ScaffoldKind::All) {
            scaffolds.push(("minimal", b.minimal()));
        }
        if matches!(a.scaffold, ScaffoldKind::Draws | ScaffoldKind::All) {
            scaffolds.push(("draws", b.minimal_with_draws()));
        }
        bases = Some(b);
    }
    for (name, s) in &scaffolds {
        let b = if s.provenance == Provenance::Loose {
            None
        } else {
            bases.as_ref()
        };
        let report = ScaffoldReport::new(s, &g, b);
        out.add(&format!("scaffold_{name}.csv"), write_scaffold_csv(s)?);
        out.add(
            &format!("ranking_{name}.csv"),
            write_ranking_csv(&report.ranking)?,
        );
        out.add(&format!("report_{name}.json"), write_json(&report)?);
    }
    out.write()
}

pub fn persistence(a: &PersistenceArgs) -> Result<Vec<PathBuf>> {
    let (_, oriented) = load(&a.io, &a.input)?;
    let mut out = Outputs::new(&a.output);
    out.add(
        "barcode.csv",
        write_barcode_csv(&compute_persistence(&build_filtration(&oriented)))?,
    );
    out.write()
}

fn length_mode(m: LengthModeArg) -> LengthMode {
    match m {
        LengthModeArg::Inverse => LengthMode::Inverse,
        LengthModeArg::Direct => LengthMode::Direct,
        LengthModeArg::Hop => LengthMode::Hop,
    }
}

fn is_scaffold_csv(text: &str) -> bool {
    text.lines()
        .next()
        .is_some_and(|l| l.trim() == "u,v,weight_decimal,weight_num,weight_den")
}

fn max_vertex(text: &str) -> usize {
    text.lines()
        .skip(1)
        .flat_map(|l| {
            l.split(',')
                .take(2)
                .filter_map(|x| x.trim().parse::<usize>().ok())
        })
        .max()
        .map_or(0, |m| m + 1)
}

fn compare_inputs(a: &CompareArgs) -> Result<Vec<ComparisonReport>> {
    let texts = a
        .inputs
        .iter()
        .map(std::fs::read_to_string)
        .collect::<std::io::Result<Vec<_>>>()?;
    let graphs = if texts.iter().all(|t| is_scaffold_csv(t)) {
        let n = a
            .n_vertices
            .unwrap_or_else(|| texts.iter().map(|t| max_vertex(t)).max().unwrap_or(0));
        texts
            .iter()
            .map(|t| read_scaffold_csv(t, n, Provenance::Minimal).map(|s| s.to_graph()))
            .collect::<Result<Vec<_>>>()?
    } else {
        texts
            .iter()
            .map(|t| match a.format {
                Format::Edgelist => parse_edge_list(t),
                Format::Adjacency => parse_adjacency(t),
            })
            .collect::<Result<Vec<_>>>()?
    };
    let (x, y) = (&graphs[0], &graphs[1]);
    let null_of_x = gen_er_null(x.n_vertices(), x.n_edges(), a.common.seed)?;
    let null_of_y = gen_er_null(y.n_vertices(), y.n_edges(), a.common.seed.wrapping_add(1))?;
    Ok(vec![compare_graphs(
        x,
        y,
        (&null_of_y, &null_of_x),
        length_mode(a.length_mode),
    )?])
}

#[allow(clippy::too_many_arguments)]
fn model_config(
    model: Model,
    n: usize,
    k: usize,
    p: f64,
    t: f64,
    m: usize,
    samples: usize,
    seed: u64,
) -> GeneratorConfig {
    match model {
        Model::Ws => GeneratorConfig::WsWeighted { n, k, p, seed },
        Model::Rgg => GeneratorConfig::Rgg { n, t, d: 2, seed },
        Model::Er => GeneratorConfig::ErNull { n, m, seed },
        Model::Spectral => GeneratorConfig::SpectralNull { n, samples, seed },
    }
}

/// Minimal against loose scaffold on each generated instance.
fn compare_sample(a: &CompareArgs, model: Model, sample: usize) -> Result<Vec<ComparisonReport>> {
    if sample == 0 {
        return Err(Error::EmptySample);
    }
    let opts = minimal_options(&a.common);
    (0..sample as u64)
        .map(|i| {
            let seed = a.common.seed.wrapping_add(i);
            let g = model_config(model, a.n, a.k, a.p, a.t, 0, 60, seed).generate()?;
            let f = build_filtration(&g);
            let minimal = step_bases(&f, &opts)?.minimal();
            let loose = loose_scaffold(&f, Essential::Include);
            compare_scaffolds(&minimal, &loose, seed)
        })
        .collect()
}

pub fn compare(a: &CompareArgs) -> Result<Vec<PathBuf>> {
    if matches!(a.model, Some(Model::Er | Model::Spectral)) {
        return Err(Error::InvalidParameter(
            "sampling supports the ws and rgg models".into(),
        ));
    }
    let reports = match (a.model, a.sample) {
        (Some(model), Some(sample)) if a.inputs.is_empty() => compare_sample(a, model, sample)?,
        (None, None) if a.inputs.len() == 2 => compare_inputs(a)?,
        _ => {
            return Err(Error::InvalidParameter(
                "compare takes either two input files or `--model` with `--sample`".into(),
            ))
        }
    };
    let mut out = Outputs::new(&a.common.output);
    out.add("comparison.csv", write_comparison_csv(&reports)?);
    out.add("comparison.json", write_json(&reports)?);
    out.add("summary.json", write_json(&summarize(&reports))?);
    out.write()
}

pub fn bench(a: &BenchArgs) -> Result<Vec<PathBuf>> {
    let seeds: Vec<u64> = (0..a.seeds)
        .map(|i| a.common.seed.wrapping_add(i))
        .collect();
    let rows = minscaffold::bench::bench_ws_sweep(&a.n, a.p, &seeds, &minimal_options(&a.common))?;
    let mut out = Outputs::new(&a.common.output);
    out.add("bench.csv", write_bench_csv(&rows)?);
    out.write()
}

pub fn generate(a: &GenerateArgs) -> Result<Vec<PathBuf>> {
    let cfg = match (&a.config, a.model) {
        (Some(path), _) => serde_json::from_str(&std::fs::read_to_string(path)?)?,
        (None, Some(model)) => {
            model_config(model, a.n, a.k, a.p, a.t, a.m, a.samples, a.common.seed)
        }
        (None, None) => {
            return Err(Error::InvalidParameter(
                "`--model` or `--config` is required".into(),
            ))
        }
    };
    let g = cfg.generate()?;
    let mut out = Outputs::new(&a.common.output);
    out.add("graph.edgelist", g.to_edge_list());
    out.add("generator.json", write_json(&cfg)?);
    out.write()
}
