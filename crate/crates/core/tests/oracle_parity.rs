//! Cross-checks of the bit-set kernel against the independent
//! Floyd–Warshall oracle, exhaustively for small n and property-based for
//! the rest of the supported range.

#![allow(clippy::needless_range_loop)]

mod common;

use common::naive_invariants;
use meci::families::FamilySpec;
use meci::graph::{emit_graph6, parse_graph6, Graph};
use meci::invariants::{all_pairs_distances, compute_all, modified_eccentric_connectivity};
use proptest::prelude::*;

fn assert_matches_oracle(g: &Graph) {
    let naive = naive_invariants(g.vertex_count(), &g.edges()).expect("connected");
    let inv = compute_all(g).expect("connected");
    assert_eq!(inv.n as usize, naive.n);
    assert_eq!(inv.m as usize, naive.m);
    assert_eq!(inv.m1, naive.m1);
    assert_eq!(inv.m2, naive.m2);
    assert_eq!(inv.e1, naive.e1);
    assert_eq!(inv.e2, naive.e2);
    assert_eq!(inv.theta, naive.theta);
    assert_eq!(inv.wiener, naive.wiener);
    assert_eq!(inv.xi_c, naive.xi_c);
    assert_eq!(inv.xi_cc, naive.xi_cc);
    assert_eq!(inv.radius as u64, naive.radius);
    assert_eq!(inv.diameter as u64, naive.diameter);
    assert_eq!(
        (inv.harary.numer(), inv.harary.denom()),
        naive.harary,
        "harary mismatch on {g:?}"
    );
    for v in 0..g.vertex_count() {
        assert_eq!(inv.profile.degree[v] as u64, naive.degrees[v]);
        assert_eq!(inv.profile.neighbor_degree_sum[v] as u64, naive.deltas[v]);
        assert_eq!(inv.profile.eccentricity[v] as u64, naive.eccs[v]);
        assert_eq!(inv.profile.distance_sum[v] as u64, naive.dist_sums[v]);
    }
    assert_eq!(modified_eccentric_connectivity(g).unwrap(), naive.xi_c);
}

#[test]
fn kernel_matches_oracle_exhaustively_to_n6() {
    for n in 1..=6usize {
        let nbits = n * (n - 1) / 2;
        for mask in 0..1u64 << nbits {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            if g.is_connected() {
                assert_matches_oracle(&g);
            } else {
                assert!(compute_all(&g).is_err());
            }
        }
    }
}

#[test]
fn distance_table_matches_oracle() {
    for n in 2..=6usize {
        let nbits = n * (n - 1) / 2;
        for mask in 0..1u64 << nbits {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            let naive = naive_invariants(n, &g.edges()).unwrap();
            let table = all_pairs_distances(&g).unwrap();
            let mut from_rows = vec![0u64; n];
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(table.get(u, v), table.get(v, u));
                    from_rows[u] += table.get(u, v) as u64;
                }
                assert_eq!(table.get(u, u), 0);
            }
            assert_eq!(from_rows, naive.dist_sums);
        }
    }
}

#[test]
fn families_match_oracle_and_closed_forms() {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 1..=12 {
        specs.push(FamilySpec::Complete { n });
        specs.push(FamilySpec::Path { n });
    }
    for n in 3..=12 {
        specs.push(FamilySpec::Cycle { n });
        specs.push(FamilySpec::Pyramid { n });
        specs.push(FamilySpec::Bipyramid { n });
        specs.push(FamilySpec::Star { n });
        for j in 1..=n / 2 {
            specs.push(FamilySpec::CompleteMinusMatching { n, j });
        }
    }
    for m in 1..=6 {
        specs.push(FamilySpec::Hypercube { m });
    }
    for m in 3..=12 {
        specs.push(FamilySpec::Prism { m });
        specs.push(FamilySpec::Antiprism { m });
    }
    specs.push(FamilySpec::CompleteMultipartite {
        parts: vec![2, 3, 3],
    });
    specs.push(FamilySpec::CompleteMultipartite {
        parts: vec![2, 2, 2, 2],
    });
    for spec in specs {
        let g = spec.build().unwrap();
        assert_matches_oracle(&g);
        let cf = spec.closed_form_xi_c().unwrap();
        if cf.status == meci::families::ClosedFormStatus::Confirmed {
            let naive = naive_invariants(g.vertex_count(), &g.edges()).unwrap();
            assert_eq!(Some(naive.xi_c), cf.predicted, "{spec}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Random graphs across the whole supported vertex range round-trip
    /// through graph6 bit-exactly.
    #[test]
    fn graph6_roundtrip(n in 1usize..=64, seed in any::<u64>()) {
        let mut edges = Vec::new();
        let mut state = seed;
        for j in 1..n {
            for i in 0..j {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 62 == 0 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edge_list(&meci::graph::EdgeList { n, edges }).unwrap();
        let s = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    /// Kernel/oracle parity on random connected graphs up to n = 8.
    #[test]
    fn kernel_matches_oracle_random(n in 2usize..=8, seed in any::<u64>()) {
        let nbits = (n * (n - 1) / 2) as u32;
        let mask = seed & ((1u64 << nbits) - 1);
        let g = Graph::from_edge_mask(n, mask).unwrap();
        if g.is_connected() {
            assert_matches_oracle(&g);
        }
    }

    /// Complement involution and degree identity across the full range.
    #[test]
    fn complement_involution(n in 1usize..=64, seed in any::<u64>()) {
        let mut edges = Vec::new();
        let mut state = seed;
        for j in 1..n {
            for i in 0..j {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 63 == 0 {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::from_edge_list(&meci::graph::EdgeList { n, edges }).unwrap();
        let gc = g.complement();
        prop_assert_eq!(gc.complement(), g.clone());
        for v in 0..n {
            prop_assert_eq!(g.degree(v) + gc.degree(v), n - 1);
        }
    }
}
