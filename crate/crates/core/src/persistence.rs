//! Persistent homology in dimensions 0 and 1 of the threshold filtration,
//! with representative cycles for the 1-dimensional classes.

use serde::Serialize;

use crate::complex::{flag_complex_at, FlagComplex2};
use crate::cycle::{edge_lengths, Cycle};
use crate::graph::Filtration;
use crate::rational::Rational;
use crate::union_find::UnionFind;
use crate::z2::{boundary_matrix, column_reduce, rank};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PersistencePair {
    pub dim: u8,
    pub birth: Rational,
    /// `None` for essential classes.
    pub death: Option<Rational>,
    pub generator: Option<Cycle>,
}

impl PersistencePair {
    pub fn is_essential(&self) -> bool {
        self.death.is_none()
    }

    pub fn alive_at(&self, eps: &Rational) -> bool {
        self.birth <= *eps && self.death.is_none_or(|d| *eps < d)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Barcode {
    pub pairs: Vec<PersistencePair>,
}

impl Barcode {
    pub fn dim(&self, dim: u8) -> impl Iterator<Item = &PersistencePair> {
        self.pairs.iter().filter(move |p| p.dim == dim)
    }

    pub fn alive_at(&self, dim: u8, eps: &Rational) -> usize {
        self.dim(dim).filter(|p| p.alive_at(eps)).count()
    }

    /// Sorted `(dim, birth, death)` triples, for comparing barcodes as multisets.
    pub fn intervals(&self) -> Vec<(u8, Rational, Option<Rational>)> {
        let mut v: Vec<_> = self
            .pairs
            .iter()
            .map(|p| (p.dim, p.birth, p.death))
            .collect();
        v.sort_by_key(|a| (a.0, a.1, a.2.is_none(), a.2));
        v
    }
}

/// Standard column reduction of the filtration-ordered boundary matrices of
/// the final complex. Zero-length bars are dropped.
///
/// A finite 1-dimensional bar carries the reduced triangle column that kills
/// it; an essential one carries the cycle recorded while reducing its edge.
pub fn compute_persistence(f: &Filtration<'_>) -> Barcode {
    let g = f.graph();
    let last = *f.steps().last().expect("filtration has at least one step");
    let cx = flag_complex_at(g, &last);
    let lengths = edge_lengths(g);
    let to_cycle = |positions: &[usize]| {
        Cycle::new(
            positions.iter().map(|&i| cx.edges[i].graph_edge).collect(),
            &lengths,
        )
    };

    let mut pairs = Vec::new();

    let d1 = boundary_matrix(&cx, 1);
    let red1 = column_reduce(&d1);
    let mut vertex_killed = vec![false; cx.n_vertices];
    let mut creator = vec![false; cx.n_edges()];
    for (j, col) in red1.reduced.columns().iter().enumerate() {
        match col.low() {
            Some(v) => {
                vertex_killed[v] = true;
                let death = cx.edges[j].value;
                if !death.is_zero() {
                    pairs.push(PersistencePair {
                        dim: 0,
                        birth: Rational::ZERO,
                        death: Some(death),
                        generator: None,
                    });
                }
            }
            None => creator[j] = true,
        }
    }
    for _ in vertex_killed.iter().filter(|k| !**k) {
        pairs.push(PersistencePair {
            dim: 0,
            birth: Rational::ZERO,
            death: None,
            generator: None,
        });
    }

    let d2 = boundary_matrix(&cx, 2);
    let red2 = column_reduce(&d2);
    let mut killed = vec![false; cx.n_edges()];
    let mut finite = Vec::new();
    for (t, col) in red2.reduced.columns().iter().enumerate() {
        if let Some(e) = col.low() {
            killed[e] = true;
            let (birth, death) = (cx.edges[e].value, cx.triangles[t].value);
            if birth != death {
                finite.push((
                    e,
                    PersistencePair {
                        dim: 1,
                        birth,
                        death: Some(death),
                        generator: Some(to_cycle(col.support())),
                    },
                ));
            }
        }
    }

    let essential_edges: Vec<usize> = (0..cx.n_edges())
        .filter(|&e| creator[e] && !killed[e])
        .collect();
    let mut essential = Vec::new();
    if !essential_edges.is_empty() {
        let v1 = red1.v_matrix();
        for &e in &essential_edges {
            essential.push((
                e,
                PersistencePair {
                    dim: 1,
                    birth: cx.edges[e].value,
                    death: None,
                    generator: Some(to_cycle(v1.column(e).support())),
                },
            ));
        }
    }

    let mut dim1: Vec<_> = finite.into_iter().chain(essential).collect();
    dim1.sort_by_key(|(e, _)| *e);
    pairs.extend(dim1.into_iter().map(|(_, p)| p));
    Barcode { pairs }
}

/// One generator cycle per 1-dimensional bar, with its birth value.
pub fn ph1_generators(f: &Filtration<'_>) -> Vec<(Cycle, Rational)> {
    compute_persistence(f)
        .pairs
        .into_iter()
        .filter(|p| p.dim == 1)
        .filter_map(|p| p.generator.map(|g| (g, p.birth)))
        .collect()
}

pub fn connected_components(cx: &FlagComplex2) -> usize {
    let mut uf = UnionFind::new(cx.n_vertices);
    for e in &cx.edges {
        uf.union(e.u, e.v);
    }
    uf.components()
}

/// First Betti number: `dim Z_1 - rank ∂_2`.
pub fn betti1_at(cx: &FlagComplex2) -> usize {
    let cycle_rank = cx.n_edges() + connected_components(cx) - cx.n_vertices;
    cycle_rank - rank(&boundary_matrix(cx, 2))
}
