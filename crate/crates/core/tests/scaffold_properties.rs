mod common;

use common::rng;
use minscaffold::complex::complexes_along;
use minscaffold::persistence::{betti1_at, compute_persistence};
use minscaffold::scaffold::{loose_scaffold, node_strength, step_bases, Essential, MinimalOptions};
use minscaffold::{build_filtration, Rational, WeightedGraph};
use rand::seq::SliceRandom;
use rand::Rng;

fn cloud(points: &[(f64, f64)]) -> WeightedGraph {
    WeightedGraph::from_points(&points.iter().map(|&(x, y)| vec![x, y]).collect::<Vec<_>>())
        .unwrap()
}

#[test]
fn shared_edge_of_two_generators_weighs_two() {
    // a unit square and a wider rectangle glued along x = 1
    let g = cloud(&[(0., 0.), (1., 0.), (0., 1.), (1., 1.), (2.2, 0.), (2.2, 1.)]);
    let s = loose_scaffold(&build_filtration(&g), Essential::Include);
    assert_eq!(s.weight(1, 3), Rational::from_integer(2));
    let ones = s
        .edge_weights
        .iter()
        .filter(|(_, &w)| w == Rational::ONE)
        .count();
    assert_eq!(ones, 6);
    assert_eq!(s.n_edges(), 7);
}

#[test]
fn pentagon_is_cut_to_a_quadrilateral() {
    // A B C D E; the diagonal B-D is the first to appear and is shorter than any other
    let g = cloud(&[(0., 0.), (1., 0.), (1.4, 0.9), (0.6, 1.5), (-0.4, 0.9)]);
    let f = build_filtration(&g);
    let bases = step_bases(&f, &MinimalOptions::default()).unwrap();
    let sizes: Vec<Vec<usize>> = bases
        .steps
        .iter()
        .map(|(_, b)| b.representatives().map(|c| c.len()).collect())
        .collect();
    assert!(sizes.contains(&vec![5]));
    assert!(sizes.contains(&vec![4]));
    let first4 = sizes.iter().position(|s| s == &vec![4]).unwrap();
    assert!(sizes[..first4].iter().any(|s| s == &vec![5]));
    let s = bases.minimal();
    // the cutting diagonal and the cut-off sides are both present
    assert_eq!(s.weight(1, 3), Rational::ONE);
    assert!(s.weight(1, 2) > Rational::ZERO && s.weight(2, 3) > Rational::ZERO);
    assert!(s.weight(0, 1) > s.weight(1, 2));
}

fn random_cloud(r: &mut rand_chacha::ChaCha8Rng, n: usize) -> WeightedGraph {
    cloud(
        &(0..n)
            .map(|_| (r.random::<f64>(), r.random::<f64>()))
            .collect::<Vec<_>>(),
    )
}

#[test]
fn conservation_and_three_way_betti_check() {
    let mut r = rng(314);
    for _ in 0..12 {
        let g = random_cloud(&mut r, 12);
        let f = build_filtration(&g);
        let bases = step_bases(&f, &MinimalOptions::default()).unwrap();
        let bc = compute_persistence(&f);
        for ((eps, b), cx) in bases.steps.iter().zip(complexes_along(&f)) {
            assert_eq!(b.beta1(), betti1_at(&cx));
            assert_eq!(b.beta1(), bc.alive_at(1, eps));
        }
        let min = bases.minimal();
        let expect: usize = bases
            .steps
            .iter()
            .flat_map(|(_, b)| b.representatives().map(|c| c.len()))
            .sum();
        assert_eq!(min.total_weight(), Rational::from_integer(expect as i128));
        let draws = bases.minimal_with_draws();
        let expect: Rational = bases
            .steps
            .iter()
            .flat_map(|(_, b)| b.variant_sets.iter())
            .map(|v| {
                Rational::new(
                    v.cycles.iter().map(|c| c.len() as i128).sum(),
                    v.len() as i128,
                )
            })
            .sum();
        assert_eq!(draws.total_weight(), expect);
        let loose = loose_scaffold(&f, Essential::Include);
        let gens: usize = bc.dim(1).map(|p| p.generator.as_ref().unwrap().len()).sum();
        assert_eq!(loose.total_weight(), Rational::from_integer(gens as i128));
        let strength: Rational = node_strength(&min).into_iter().sum();
        assert_eq!(strength, min.total_weight() + min.total_weight());
    }
}

#[test]
fn singleton_variant_sets_make_both_minimal_scaffolds_equal() {
    let mut r = rng(5);
    for _ in 0..10 {
        let g = random_cloud(&mut r, 11);
        let bases = step_bases(&build_filtration(&g), &MinimalOptions::default()).unwrap();
        if bases.variant_histogram().keys().all(|&k| k == 1) {
            let (a, b) = (bases.minimal(), bases.minimal_with_draws());
            assert_eq!(a.edge_weights, b.edge_weights);
        }
    }
}

#[test]
fn draws_scaffold_is_invariant_under_relabeling() {
    let mut r = rng(17);
    for _ in 0..6 {
        let n = 10;
        let g = random_cloud(&mut r, n);
        let mut ws: Vec<Rational> = g.weights().copied().collect();
        ws.sort();
        ws.dedup();
        assert_eq!(ws.len(), g.n_edges());
        let f = build_filtration(&g);
        let base = step_bases(&f, &MinimalOptions::default())
            .unwrap()
            .minimal_with_draws();
        let bars = compute_persistence(&f).intervals();
        for _ in 0..50 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut r);
            let h = g.relabel(&perm).unwrap();
            let fh = build_filtration(&h);
            let s = step_bases(&fh, &MinimalOptions::default())
                .unwrap()
                .minimal_with_draws();
            for (&(u, v), &w) in &base.edge_weights {
                assert_eq!(s.weight(perm[u], perm[v]), w);
            }
            assert_eq!(s.n_edges(), base.n_edges());
            assert_eq!(compute_persistence(&fh).intervals(), bars);
            assert_eq!(loose_scaffold(&fh, Essential::Include).n_vertices, n);
        }
    }
}
