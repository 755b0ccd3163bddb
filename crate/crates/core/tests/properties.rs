mod common;

use proptest::prelude::*;

use pathhom::cli::diagrams_agree;
use pathhom::field::{Field, PrimeField, RationalField};
use pathhom::homology_static::{generating_set_static, h1_rank_static};
use pathhom::minbasis::compute_annotations;
use pathhom::oracle;
use pathhom::{generate, persistence, Chain1, FilteredDigraph};

const F: PrimeField = PrimeField::DEFAULT;

fn graph() -> impl Strategy<Value = FilteredDigraph> {
    (3usize..=9, 0.05f64..0.7, any::<u64>(), any::<bool>()).prop_map(|(n, p, seed, tied)| {
        if tied {
            generate::er_tied(n, p, 3, seed).unwrap()
        } else {
            generate::er(n, p, seed).unwrap()
        }
    })
}

fn relabel(g: &FilteredDigraph, perm: &[usize]) -> FilteredDigraph {
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|e| (perm[e.src], perm[e.dst], e.weight))
        .collect();
    FilteredDigraph::from_edges(g.n(), &edges).unwrap()
}

fn weight_points(g: &FilteredDigraph) -> Vec<(f64, f64)> {
    persistence(&F, g).unwrap().diagram.sorted_points()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn fast_matches_oracle(g in graph()) {
        let fast = persistence(&F, &g).unwrap();
        let slow = oracle::persistence_oracle(&F, &g);
        prop_assert!(diagrams_agree(&fast.diagram, &slow));
        let r = oracle::h1_rank_oracle(&F, &g);
        prop_assert_eq!(fast.rank_h1(), r.h1);
        prop_assert_eq!(h1_rank_static(&F, &g).h1, r.h1);
        prop_assert_eq!(fast.rank_b1(), r.b1);
    }

    #[test]
    fn rational_and_prime_agree(g in graph()) {
        let a = persistence(&F, &g).unwrap();
        let b = persistence(&RationalField, &g).unwrap();
        prop_assert_eq!(a.diagram.sorted_points(), b.diagram.sorted_points());
    }

    #[test]
    fn essentials_are_independent_cycles(g in graph()) {
        let p = persistence(&F, &g).unwrap();
        let mut basis = p.boundary.clone();
        for e in &p.diagram.essentials {
            prop_assert!(e.cycle.is_cycle(&F, &g));
            prop_assert!(basis.insert(&e.cycle).is_some());
        }
    }

    #[test]
    fn generated_boundaries_are_boundaries(g in graph()) {
        let b = oracle::b1_basis_oracle(&F, &g);
        for c in generating_set_static(&F, &g) {
            prop_assert!(b.contains(&c));
        }
    }

    #[test]
    fn generating_set_within_size_bound(g in graph()) {
        prop_assert!(persistence(&F, &g).unwrap().generated <= common::size_bound(&g));
    }

    #[test]
    fn diagram_invariant_under_relabelling(g in graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(weight_points(&g), weight_points(&relabel(&g, &perm)));
    }

    #[test]
    fn annotations_are_homomorphic(g in graph(), a in 0usize..64, b in 0usize..64) {
        let p = persistence(&F, &g).unwrap();
        let ann = compute_annotations(&g, &p).unwrap();
        let z = oracle::z1_basis_oracle(&F, &g);
        prop_assume!(!z.is_empty());
        let (c1, c2) = (&z[a % z.len()], &z[b % z.len()]);
        let sum = c1.add(&F, c2);
        let lhs = ann.of(&F, &sum);
        let rhs: Vec<u64> = ann.of(&F, c1).iter().zip(ann.of(&F, c2)).map(|(x, y)| F.add(x, &y)).collect();
        prop_assert_eq!(lhs, rhs);
        // homologous iff equal annotations
        let diff = c1.sub(&F, c2);
        prop_assert_eq!(p.boundary.contains(&diff), ann.of(&F, &diff).iter().all(|x| *x == 0));
        for gen in oracle::all_generators(&F, &g) {
            prop_assert!(ann.of(&F, &gen).iter().all(|x| *x == 0));
        }
    }

    #[test]
    fn decomposition_round_trip(g in graph(), coeffs in prop::collection::vec(-3i64..=3, 16)) {
        let basis = oracle::omega2_basis(&F, &g);
        let mut elem = oracle::TwoChain::new();
        for (b, c) in basis.iter().zip(coeffs.iter().cycle()) {
            for (k, v) in b {
                let slot = elem.entry(*k).or_insert(0);
                *slot = F.add(slot, &F.mul(&F.from_i64(*c), v));
            }
        }
        elem.retain(|_, v| *v != 0);
        let mut sum = Chain1::zero();
        for gen in oracle::decompose_boundary(&F, &g, &elem).unwrap() {
            sum = sum.add_scaled(&F, &gen.coeff, &gen.chain);
        }
        prop_assert_eq!(sum, oracle::boundary_of(&F, &g, &elem).unwrap());
    }
}

#[test]
fn zero_weight_pairs_can_be_filtered() {
    let g = generate::fixtures::triangle_plus_chord();
    let mut d = persistence(&F, &g).unwrap().diagram;
    assert_eq!(d.pairs.len(), 2);
    d.drop_diagonal();
    assert_eq!(d.sorted_points(), vec![(3.0, 4.0)]);
}

#[test]
fn quadrangle_fan_pairs_at_last_edge() {
    let g = generate::fixtures::quadrangle_fan();
    let p = persistence(&F, &g).unwrap();
    let last = g.weight(g.m() - 1);
    assert_eq!(p.diagram.pairs.len(), 3);
    assert!(p.diagram.pairs.iter().all(|q| q.death == last));
}

#[test]
fn fan_family_is_acyclic() {
    for (ls, lt) in [(2, 2), (3, 5), (10, 10)] {
        let g = generate::fan(ls, lt);
        assert_eq!(h1_rank_static(&F, &g).h1, 0);
        assert_eq!(persistence(&F, &g).unwrap().rank_h1(), 0);
    }
    assert_eq!(oracle::h1_rank_oracle(&F, &generate::fan(2, 2)).h1, 0);
}

#[test]
fn bipartite_has_no_boundaries() {
    let g = generate::fixtures::bipartite_4x4();
    let r = oracle::h1_rank_oracle(&F, &g);
    assert_eq!((r.b1, r.h1), (0, 9));
    assert_eq!(persistence(&F, &g).unwrap().rank_h1(), 9);
}
