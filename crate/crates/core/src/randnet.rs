//! Seeded random-network generators and null models.

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::Rational;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum GeneratorConfig {
    WsWeighted {
        n: usize,
        k: usize,
        p: f64,
        seed: u64,
    },
    Rgg {
        n: usize,
        t: f64,
        #[serde(default = "two")]
        d: usize,
        seed: u64,
    },
    ErNull {
        n: usize,
        m: usize,
        seed: u64,
    },
    /// A random correlation matrix on `n` variables, rotated, as a `1 - c` distance graph.
    SpectralNull {
        n: usize,
        #[serde(default = "default_samples")]
        samples: usize,
        seed: u64,
    },
}

fn two() -> usize {
    2
}

fn default_samples() -> usize {
    60
}

impl GeneratorConfig {
    pub fn generate(&self) -> Result<WeightedGraph> {
        match *self {
            GeneratorConfig::WsWeighted { n, k, p, seed } => gen_ws_weighted(n, k, p, seed),
            GeneratorConfig::Rgg { n, t, d, seed } => gen_rgg(n, t, d, seed),
            GeneratorConfig::ErNull { n, m, seed } => gen_er_null(n, m, seed),
            GeneratorConfig::SpectralNull { n, samples, seed } => {
                let c = random_correlation_matrix(n, samples, seed)?;
                correlation_distance_graph(&spectral_rotation_null(&c, seed.wrapping_add(1))?)
            }
        }
    }
}

fn circular_distance(n: usize, a: usize, b: usize) -> usize {
    let d = a.abs_diff(b);
    d.min(n - d)
}

/// Weighted Watts-Strogatz graph.
///
/// Each vertex of a ring lattice links to its `⌊k/2⌋` clockwise neighbours;
/// every such edge keeps its first endpoint and, with probability `p`, moves
/// its second endpoint to a uniformly chosen vertex that is not yet adjacent.
/// The weight is `1 + d + j` where `d` is the circular ring distance of the
/// endpoints and `j` a jitter in `(0, 1e-6)`, a multiple of `1e-12`.
pub fn gen_ws_weighted(n: usize, k: usize, p: f64, seed: u64) -> Result<WeightedGraph> {
    if k < 2 || k >= n {
        return Err(Error::InvalidParameter(format!(
            "need 2 <= k < n, got k={k}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "p={p} is not a probability"
        )));
    }
    let mut r = rng(seed);
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    for j in 1..=k / 2 {
        for u in 0..n {
            edges.insert(key(u, (u + j) % n));
        }
    }
    for j in 1..=k / 2 {
        for u in 0..n {
            let v = (u + j) % n;
            if !edges.contains(&key(u, v)) || !r.random_bool(p) {
                continue;
            }
            let degree = edges.iter().filter(|&&(a, b)| a == u || b == u).count();
            if degree >= n - 1 {
                continue;
            }
            let w = loop {
                let w = r.random_range(0..n);
                if w != u && !edges.contains(&key(u, w)) {
                    break w;
                }
            };
            edges.remove(&key(u, v));
            edges.insert(key(u, w));
        }
    }
    let weighted: Vec<_> = edges
        .into_iter()
        .map(|(a, b)| {
            let jitter = Rational::new(r.random_range(1..1_000_000), 1_000_000_000_000);
            (
                a,
                b,
                Rational::from_integer(1 + circular_distance(n, a, b) as i128) + jitter,
            )
        })
        .collect();
    WeightedGraph::new(n, weighted)
}

/// Random geometric graph: `n` uniform points in `[0,1]^d`, an edge of
/// weight equal to the Euclidean distance for every pair within `t`.
pub fn gen_rgg(n: usize, t: f64, d: usize, seed: u64) -> Result<WeightedGraph> {
    if n == 0 || d == 0 || t.is_nan() || t <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "need n >= 1, d >= 1, t > 0; got n={n}, d={d}, t={t}"
        )));
    }
    let mut r = rng(seed);
    let points: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..d).map(|_| r.random::<f64>()).collect())
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let dist = points[u]
                .iter()
                .zip(&points[v])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt();
            if dist <= t {
                edges.push((u, v, Rational::from_f64(dist)?));
            }
        }
    }
    WeightedGraph::new(n, edges)
}

/// Erdős-Rényi null: `m` distinct uniformly chosen pairs with unit weight.
pub fn gen_er_null(n: usize, m: usize, seed: u64) -> Result<WeightedGraph> {
    let total = n * n.saturating_sub(1) / 2;
    if m > total {
        return Err(Error::InvalidParameter(format!(
            "{m} edges exceed the {total} pairs on {n} vertices"
        )));
    }
    let mut r = rng(seed);
    let mut pairs = Vec::with_capacity(m);
    for idx in sample(&mut r, total, m) {
        // row u holds pairs (u, u+1..n)
        let (mut u, mut rest) = (0, idx);
        while rest >= n - 1 - u {
            rest -= n - 1 - u;
            u += 1;
        }
        pairs.push((u, u + 1 + rest, Rational::ONE));
    }
    WeightedGraph::new(n, pairs)
}

fn check_symmetric_psd(c: &DMatrix<f64>) -> Result<()> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            row: 0,
            found: c.ncols(),
            expected: c.nrows(),
        });
    }
    let n = c.nrows();
    for i in 0..n {
        for j in i + 1..n {
            let scale = 1f64.max(c[(i, j)].abs());
            if (c[(i, j)] - c[(j, i)]).abs() > 1e-12 * scale {
                return Err(Error::Asymmetric { i, j });
            }
        }
    }
    if n > 0 {
        let min = c.clone().symmetric_eigenvalues().min();
        if min < -1e-9 {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
            });
        }
    }
    Ok(())
}

/// Haar-random orthogonal matrix: QR of a Gaussian matrix, with the columns
/// of `Q` flipped so that `R` has a positive diagonal.
pub fn random_orthogonal(n: usize, seed: u64) -> DMatrix<f64> {
    let mut r = rng(seed);
    let g = DMatrix::from_fn(n, n, |_, _| r.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let (mut q, rr) = (qr.q(), qr.r());
    for j in 0..n {
        if rr[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// `Q C Qᵀ` for a random orthogonal `Q`: same spectrum, shuffled eigenvectors.
pub fn spectral_rotation_null(corr: &DMatrix<f64>, seed: u64) -> Result<DMatrix<f64>> {
    check_symmetric_psd(corr)?;
    let q = random_orthogonal(corr.nrows(), seed);
    let rotated = &q * corr * q.transpose();
    Ok((&rotated + rotated.transpose()) * 0.5)
}

/// Sample correlation matrix of `samples` observations of `n` variables in
/// three modules: variable `i` loads on the factor of module `i mod 3` with
/// strength `1 + |z|/2`, plus unit Gaussian noise.
pub fn random_correlation_matrix(n: usize, samples: usize, seed: u64) -> Result<DMatrix<f64>> {
    if n == 0 || samples < 2 {
        return Err(Error::InvalidParameter(
            "need n >= 1 and at least two samples".into(),
        ));
    }
    let mut r = rng(seed);
    let modules = 3.min(n);
    let loadings = DMatrix::from_fn(n, modules, |i, m| {
        if i % modules == m {
            1.0 + 0.5 * r.sample::<f64, _>(StandardNormal).abs()
        } else {
            0.0
        }
    });
    let scores = DMatrix::from_fn(modules, samples, |_, _| r.sample::<f64, _>(StandardNormal));
    let noise = DMatrix::from_fn(n, samples, |_, _| r.sample::<f64, _>(StandardNormal));
    let mut x = loadings * scores + noise;
    for mut row in x.row_iter_mut() {
        let mean = row.mean();
        row.add_scalar_mut(-mean);
        let norm = row.norm();
        if norm > 0.0 {
            row /= norm;
        }
    }
    let c = &x * x.transpose();
    Ok((&c + c.transpose()) * 0.5)
}

/// Complete graph with weight `1 - c_ij` on every pair. The diagonal is ignored.
pub fn correlation_distance_graph(c: &DMatrix<f64>) -> Result<WeightedGraph> {
    if !c.is_square() {
        return Err(Error::NotSquare {
            row: 0,
            found: c.ncols(),
            expected: c.nrows(),
        });
    }
    let n = c.nrows();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let w = (1.0 - 0.5 * (c[(i, j)] + c[(j, i)])).max(0.0);
            edges.push((i, j, Rational::from_f64(w)?));
        }
    }
    WeightedGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_eigenvalues(m: &DMatrix<f64>) -> Vec<f64> {
        let mut e: Vec<f64> = m.clone().symmetric_eigenvalues().iter().copied().collect();
        e.sort_by(f64::total_cmp);
        e
    }

    #[test]
    fn ring_lattice_when_p_is_zero() {
        let g = gen_ws_weighted(10, 4, 0.0, 3).unwrap();
        assert_eq!(g.n_edges(), 20);
        for e in g.edges() {
            let d = circular_distance(10, e.u, e.v);
            assert!(d == 1 || d == 2);
            let base = Rational::from_integer(1 + d as i128);
            assert!(e.w > base && e.w < base + Rational::new(1, 1_000_000));
        }
        assert_eq!(gen_ws_weighted(10, 4, 0.0, 3).unwrap(), g);
    }

    #[test]
    fn ws_rewiring_keeps_edge_count_and_determinism() {
        for n in [10, 20, 30, 40] {
            let g = gen_ws_weighted(n, n / 2, 0.025, 7).unwrap();
            assert_eq!(g.n_edges(), n * (n / 4));
            assert_eq!(gen_ws_weighted(n, n / 2, 0.025, 7).unwrap(), g);
        }
        let a = gen_ws_weighted(30, 6, 0.5, 1).unwrap();
        let b = gen_ws_weighted(30, 6, 0.5, 2).unwrap();
        assert_ne!(a, b);
        assert_eq!(a.n_edges(), 90);
    }

    #[test]
    fn ws_parameter_errors() {
        assert_eq!(gen_ws_weighted(10, 3, 0.0, 0).unwrap().n_edges(), 10);
        assert!(gen_ws_weighted(10, 10, 0.1, 0).is_err());
        assert!(gen_ws_weighted(10, 4, 1.5, 0).is_err());
        assert!(gen_ws_weighted(10, 0, 0.1, 0).is_err());
    }

    #[test]
    fn rgg_extremes_and_metric() {
        assert_eq!(gen_rgg(12, 2f64.sqrt(), 2, 1).unwrap().n_edges(), 66);
        assert_eq!(gen_rgg(12, 1e-12, 2, 1).unwrap().n_edges(), 0);
        assert!(gen_rgg(0, 0.5, 2, 1).is_err());
        let g = gen_rgg(30, 2.0, 2, 9).unwrap();
        let w = |a, b| g.edge(g.edge_id(a, b).unwrap()).w.to_f64();
        for a in 0..30 {
            for b in a + 1..30 {
                for c in b + 1..30 {
                    assert!(w(a, c) <= w(a, b) + w(b, c) + 1e-12);
                    assert!(w(a, b) <= w(a, c) + w(b, c) + 1e-12);
                    assert!(w(b, c) <= w(a, b) + w(a, c) + 1e-12);
                }
            }
        }
    }

    #[test]
    fn rgg_weights_are_distinct() {
        for seed in 0..100 {
            let g = gen_rgg(20, 0.4, 2, seed).unwrap();
            let mut ws: Vec<_> = g.weights().collect();
            ws.sort();
            ws.dedup();
            assert_eq!(ws.len(), g.n_edges());
        }
    }

    #[test]
    fn er_null_sizes() {
        assert_eq!(gen_er_null(8, 0, 1).unwrap().n_edges(), 0);
        assert_eq!(gen_er_null(8, 28, 1).unwrap().n_edges(), 28);
        assert!(gen_er_null(8, 29, 1).is_err());
        let g = gen_er_null(15, 40, 4).unwrap();
        assert_eq!(g.n_edges(), 40);
        assert!(g.weights().all(|w| *w == Rational::ONE));
        assert_eq!(gen_er_null(15, 40, 4).unwrap(), g);
    }

    #[test]
    fn rotation_preserves_spectrum() {
        let id = DMatrix::<f64>::identity(5, 5);
        let r = spectral_rotation_null(&id, 3).unwrap();
        assert!((r - id).abs().max() < 1e-12);

        let d = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![2.0, 1.0]));
        let e = sorted_eigenvalues(&spectral_rotation_null(&d, 8).unwrap());
        assert!((e[0] - 1.0).abs() < 1e-9 && (e[1] - 2.0).abs() < 1e-9);

        let c = random_correlation_matrix(30, 60, 12).unwrap();
        let r = spectral_rotation_null(&c, 13).unwrap();
        let (a, b) = (sorted_eigenvalues(&c), sorted_eigenvalues(&r));
        assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= 1e-9));
        assert!((&r - r.transpose()).abs().max() <= 1e-12);
        let q = random_orthogonal(6, 1);
        assert!(
            (&q * q.transpose() - DMatrix::<f64>::identity(6, 6))
                .abs()
                .max()
                < 1e-12
        );
    }

    #[test]
    fn rotation_rejects_bad_input() {
        let asym = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.2, 1.0]);
        assert!(matches!(
            spectral_rotation_null(&asym, 0),
            Err(Error::Asymmetric { .. })
        ));
        let indefinite = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, 2.0, 1.0]);
        assert!(matches!(
            spectral_rotation_null(&indefinite, 0),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
        let rect = DMatrix::<f64>::zeros(2, 3);
        assert!(spectral_rotation_null(&rect, 0).is_err());
    }

    #[test]
    fn config_round_trip() {
        let cfg: GeneratorConfig =
            serde_json::from_str(r#"{"model":"rgg","n":10,"t":0.3,"seed":4}"#).unwrap();
        assert_eq!(
            cfg,
            GeneratorConfig::Rgg {
                n: 10,
                t: 0.3,
                d: 2,
                seed: 4
            }
        );
        assert_eq!(cfg.generate().unwrap(), gen_rgg(10, 0.3, 2, 4).unwrap());
        let ws = GeneratorConfig::WsWeighted {
            n: 12,
            k: 4,
            p: 0.1,
            seed: 2,
        };
        let back: GeneratorConfig =
            serde_json::from_str(&serde_json::to_string(&ws).unwrap()).unwrap();
        assert_eq!(back, ws);
        let sn = GeneratorConfig::SpectralNull {
            n: 8,
            samples: 20,
            seed: 1,
        }
        .generate()
        .unwrap();
        assert_eq!(sn.n_edges(), 28);
    }
}
