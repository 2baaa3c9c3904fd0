//! Wall-clock comparison of the loose and minimal scaffold pipelines.

use std::time::Instant;

use crate::error::Result;
use crate::graph::build_filtration;
use crate::io::BenchRow;
use crate::randnet::gen_ws_weighted;
use crate::scaffold::{loose_scaffold, step_bases, Essential, MinimalOptions};

/// Times both pipelines on one weighted Watts-Strogatz instance.
pub fn bench_ws_instance(
    n: usize,
    k: usize,
    p: f64,
    seed: u64,
    opts: &MinimalOptions,
) -> Result<BenchRow> {
    let g = gen_ws_weighted(n, k, p, seed)?;
    let f = build_filtration(&g);
    let t = Instant::now();
    let loose = loose_scaffold(&f, Essential::Include);
    let loose_ms = t.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let minimal = step_bases(&f, opts)?.minimal();
    let minimal_ms = t.elapsed().as_secs_f64() * 1e3;
    std::hint::black_box((loose, minimal));
    Ok(BenchRow {
        model: "ws".into(),
        n,
        k,
        p,
        seed,
        loose_ms,
        minimal_ms,
    })
}

/// Sweeps `ns` with `k = n/2`, each over `seeds`.
pub fn bench_ws_sweep(
    ns: &[usize],
    p: f64,
    seeds: &[u64],
    opts: &MinimalOptions,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in ns {
        for &seed in seeds {
            rows.push(bench_ws_instance(n, n / 2, p, seed, opts)?);
        }
    }
    Ok(rows)
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    }
}
