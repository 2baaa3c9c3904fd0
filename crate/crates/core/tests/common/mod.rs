//! Independent brute-force references shared by integration tests.
#![allow(dead_code)]

use minscaffold::{Rational, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Row-echelon insertion over Z2 on u64 masks; returns false if `v` is dependent.
fn insert(basis: &mut Vec<u64>, mut v: u64) -> bool {
    for &b in basis.iter() {
        let top = 63 - b.leading_zeros();
        if v >> top & 1 == 1 {
            v ^= b;
        }
    }
    if v == 0 {
        return false;
    }
    let top = 63 - v.leading_zeros();
    for b in basis.iter_mut() {
        if *b >> top & 1 == 1 {
            *b ^= v;
        }
    }
    basis.push(v);
    basis.sort_unstable_by(|a, b| b.cmp(a));
    true
}

pub struct SmallComplex {
    pub n: usize,
    pub edges: Vec<(usize, usize, Rational)>,
    /// Triangle boundaries as edge masks.
    pub triangles: Vec<u64>,
}

impl SmallComplex {
    /// All edges of weight ≤ eps and all their 3-cliques. At most 64 edges.
    pub fn at(g: &WeightedGraph, eps: &Rational) -> Self {
        let edges: Vec<_> = g
            .edges()
            .iter()
            .filter(|e| e.w <= *eps)
            .map(|e| (e.u, e.v, e.w))
            .collect();
        assert!(edges.len() <= 64);
        let idx = |a: usize, b: usize| {
            edges
                .iter()
                .position(|&(u, v, _)| (u, v) == (a.min(b), a.max(b)))
        };
        let n = g.n_vertices();
        let mut triangles = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if let (Some(x), Some(y), Some(z)) = (idx(a, b), idx(a, c), idx(b, c)) {
                        triangles.push(1 << x | 1 << y | 1 << z);
                    }
                }
            }
        }
        SmallComplex {
            n,
            edges,
            triangles,
        }
    }

    pub fn length(&self, mask: u64) -> Rational {
        (0..self.edges.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.edges[i].2)
            .sum()
    }

    fn components(&self) -> usize {
        let mut label: Vec<usize> = (0..self.n).collect();
        loop {
            let mut changed = false;
            for &(u, v, _) in &self.edges {
                let m = label[u].min(label[v]);
                if label[u] != m || label[v] != m {
                    label[u] = m;
                    label[v] = m;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        (0..self.n).filter(|&v| label[v] == v).count()
    }

    pub fn boundary_rank(&self) -> usize {
        let mut basis = Vec::new();
        self.triangles
            .iter()
            .filter(|&&t| insert(&mut basis, t))
            .count()
    }

    pub fn beta1(&self) -> usize {
        self.edges.len() + self.components() - self.n - self.boundary_rank()
    }

    /// Every simple cycle, as an edge mask: connected subsets where every vertex has degree 0 or 2.
    pub fn simple_cycles(&self) -> Vec<u64> {
        let m = self.edges.len();
        assert!(m <= 20, "exhaustive enumeration is for small graphs");
        let mut out = Vec::new();
        for mask in 1u64..(1 << m) {
            let mut deg = vec![0u8; self.n];
            for i in 0..m {
                if mask >> i & 1 == 1 {
                    deg[self.edges[i].0] += 1;
                    deg[self.edges[i].1] += 1;
                }
            }
            if deg.iter().any(|&d| d != 0 && d != 2) {
                continue;
            }
            // connected: walk from one touched vertex
            let start = deg.iter().position(|&d| d == 2).unwrap();
            let mut seen = vec![false; self.n];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                for i in 0..m {
                    if mask >> i & 1 == 1 {
                        let (u, v, _) = self.edges[i];
                        let y = if u == x {
                            v
                        } else if v == x {
                            u
                        } else {
                            continue;
                        };
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            if deg.iter().zip(&seen).all(|(&d, &s)| d == 0 || s) {
                out.push(mask);
            }
        }
        out
    }

    /// Minimum total length of `β1` cycles that are independent modulo boundaries,
    /// by exhaustive branch and bound over simple cycles.
    pub fn brute_force_optimum(&self) -> Rational {
        let k = self.beta1();
        if k == 0 {
            return Rational::ZERO;
        }
        let mut cycles: Vec<(Rational, u64)> = self
            .simple_cycles()
            .into_iter()
            .map(|c| (self.length(c), c))
            .collect();
        cycles.sort();
        let mut boundary = Vec::new();
        for &t in &self.triangles {
            insert(&mut boundary, t);
        }
        let mut best: Option<Rational> = None;
        let mut basis = boundary.clone();
        search(&cycles, 0, k, Rational::ZERO, &mut basis, &mut best);
        best.expect("some basis exists")
    }
}

fn search(
    cycles: &[(Rational, u64)],
    from: usize,
    left: usize,
    acc: Rational,
    basis: &mut Vec<u64>,
    best: &mut Option<Rational>,
) {
    if left == 0 {
        if best.is_none_or(|b| acc < b) {
            *best = Some(acc);
        }
        return;
    }
    if cycles.len() - from < left {
        return;
    }
    // cheapest possible completion
    let bound: Rational = cycles[from..from + left].iter().map(|c| c.0).sum();
    if best.is_some_and(|b| acc + bound >= b) {
        return;
    }
    for i in from..cycles.len() {
        let saved = basis.clone();
        if insert(basis, cycles[i].1) {
            search(cycles, i + 1, left - 1, acc + cycles[i].0, basis, best);
        }
        *basis = saved;
    }
}

/// Connected graph on `n` vertices with `m` edges and distinct positive integer weights.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, m: usize) -> WeightedGraph {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let j = rng.random_range(0..i);
        let (a, b) = (order[i], order[j]);
        pairs.push((a.min(b), a.max(b)));
    }
    let mut rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|p| !pairs.contains(p))
        .collect();
    rest.shuffle(rng);
    pairs.extend(rest.into_iter().take(m.saturating_sub(n - 1)));
    let mut weights: Vec<i128> = (1..=(4 * pairs.len() as i128)).collect();
    weights.shuffle(rng);
    WeightedGraph::new(
        n,
        pairs
            .into_iter()
            .zip(weights)
            .map(|((u, v), w)| (u, v, Rational::from_integer(w))),
    )
    .unwrap()
}

/// Connected bipartite graph (so no triangles) with distinct positive integer weights.
pub fn random_bipartite(rng: &mut ChaCha8Rng, n: usize, m: usize) -> WeightedGraph {
    let left = n / 2;
    let cross: Vec<(usize, usize)> = (0..left)
        .flat_map(|u| (left..n).map(move |v| (u, v)))
        .collect();
    loop {
        let mut pick = cross.clone();
        pick.shuffle(rng);
        pick.truncate(m.min(cross.len()));
        let mut weights: Vec<i128> = (1..=(4 * pick.len() as i128)).collect();
        weights.shuffle(rng);
        let g = WeightedGraph::new(
            n,
            pick.into_iter()
                .zip(weights)
                .map(|((u, v), w)| (u, v, Rational::from_integer(w))),
        )
        .unwrap();
        let full = SmallComplex::at(&g, &g.max_weight().unwrap());
        if full.components() == 1 {
            return g;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
