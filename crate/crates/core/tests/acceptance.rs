//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Censused discrepancies — the pyramid family value, the bipyramid at
//! n = 3, the stated T1ii/T7 forms, and the star-minimality bound T13 with
//! its n = 7 spider counterexample — are asserted *as discrepancies*: the
//! suite freezes the oracle-verified censuses and fails if they drift.

mod common;

use std::sync::OnceLock;
use std::time::Instant;

use common::{connected_labeled_count, labeled_matchings, naive_invariants};
use meci::bounds::{check, check_nordhaus_gaddum, BoundId};
use meci::enumerate::{sweep, SweepConfig, VerificationReport};
use meci::families::{ClosedFormStatus, FamilySpec};
use meci::graph::{emit_graph6, parse_graph6, Graph};
use meci::invariants::compute_all;

fn criterion(n: u32, ok: bool, detail: &str) {
    println!(
        "criterion {n}: {} — {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {n} failed: {detail}");
}

static FULL_SWEEP: OnceLock<VerificationReport> = OnceLock::new();

/// The shared 2 ≤ n ≤ 7 sweep used by criteria 3–6.
fn full_sweep() -> &'static VerificationReport {
    FULL_SWEEP.get_or_init(|| {
        sweep(&SweepConfig::default()).expect("default sweep configuration is valid")
    })
}

fn family(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

fn xi_c_of(spec: &FamilySpec) -> u64 {
    compute_all(&spec.build().unwrap()).unwrap().xi_c
}

#[test]
fn criterion_1_closed_form_reproduction() {
    let started = Instant::now();
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 1..=12 {
        specs.push(FamilySpec::Complete { n });
    }
    for n in 3..=12 {
        specs.push(FamilySpec::Cycle { n });
        specs.push(FamilySpec::Star { n });
    }
    for m in 1..=6 {
        specs.push(FamilySpec::Hypercube { m });
    }
    for m in 3..=12 {
        specs.push(FamilySpec::Prism { m });
        specs.push(FamilySpec::Antiprism { m });
    }
    for n in 4..=12 {
        specs.push(FamilySpec::Bipyramid { n });
    }
    // Every multiset of part sizes ≥ 2 with ≥ 2 parts and ≤ 12 vertices.
    fn partitions(remaining: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        let mut p = min;
        while p <= remaining {
            cur.push(p);
            partitions(remaining - p, p, cur, out);
            cur.pop();
            p += 1;
        }
    }
    let mut parts = Vec::new();
    partitions(12, 2, &mut Vec::new(), &mut parts);
    for p in parts {
        specs.push(FamilySpec::CompleteMultipartite { parts: p });
    }

    let mut checked = 0usize;
    for spec in &specs {
        let g = spec.build().unwrap();
        let inv = compute_all(&g).unwrap();
        let cf = spec.closed_form_xi_c().unwrap();
        assert_eq!(
            cf.status,
            ClosedFormStatus::Confirmed,
            "{spec} should be a confirmed formula"
        );
        assert_eq!(Some(inv.xi_c), cf.predicted, "{spec}: BFS vs closed form");
        // Independent route: the Floyd–Warshall oracle agrees exactly.
        let naive = naive_invariants(g.vertex_count(), &g.edges()).unwrap();
        assert_eq!(Some(naive.xi_c), cf.predicted, "{spec}: oracle vs closed form");
        checked += 1;
    }
    let elapsed = started.elapsed();
    criterion(
        1,
        elapsed.as_secs_f64() < 1.0,
        &format!(
            "{checked} family instances (params ≤ 12, hypercube ≤ 6 at the 64-vertex cap) \
             reproduce their closed forms exactly in {elapsed:?}"
        ),
    );
}

#[test]
fn criterion_2_pyramid_discrepancy_census() {
    let spec = family("pyramid:4");
    let cf = spec.closed_form_xi_c().unwrap();
    assert_eq!(cf.status, ClosedFormStatus::KnownDiscrepancy);
    assert_eq!(cf.predicted, Some(52));
    assert_eq!(xi_c_of(&spec), 92);

    // The value census for n = 4..12: direct evaluation (and the
    // independent oracle) give 2n² + 15n, never the published 2n² + 5n.
    println!("pyramid census (n, computed, published):");
    for n in 4u64..=12 {
        let spec = FamilySpec::Pyramid { n: n as u32 };
        let g = spec.build().unwrap();
        let computed = compute_all(&g).unwrap().xi_c;
        let naive = naive_invariants(g.vertex_count(), &g.edges()).unwrap().xi_c;
        let published = 2 * n * n + 5 * n;
        assert_eq!(computed, naive);
        assert_eq!(computed, 2 * n * n + 15 * n);
        assert_ne!(computed, published);
        assert_eq!(
            spec.closed_form_xi_c().unwrap().status,
            ClosedFormStatus::KnownDiscrepancy
        );
        println!("  {n}: {computed} vs {published}");
    }

    // The bipyramid carries the same treatment at its single bad point.
    let b3 = family("bipyramid:3");
    let cf = b3.closed_form_xi_c().unwrap();
    assert_eq!(cf.status, ClosedFormStatus::KnownDiscrepancy);
    assert_eq!(cf.predicted, Some(132));
    assert_eq!(xi_c_of(&b3), 90);

    criterion(
        2,
        true,
        "pyramid(4) computes 92 against the published 52; census n=4..12 emitted \
         (2n²+15n throughout); bipyramid(3) computes 90 against the published 132 — \
         both carry KNOWN_DISCREPANCY status",
    );
}

#[test]
fn criterion_3_exhaustive_soundness_sweep() {
    let rep = full_sweep();

    // The enumeration substrate is itself oracle-checked: per-n totals
    // match the inclusion–exclusion recurrence.
    for n in 2u64..=7 {
        assert_eq!(
            rep.graphs_per_n.get(&(n as u32)).copied().unwrap_or(0),
            connected_labeled_count(n),
            "connected labelled count at n = {n}"
        );
    }

    // Zero violations for every asserted bound (exact arithmetic).
    let mut asserted = 0usize;
    for b in &rep.bounds {
        assert_eq!(
            b.graphs_checked + b.inapplicable_count,
            rep.total_graphs,
            "{}: conservation",
            b.id
        );
        assert_eq!(b.graphs_checked, b.holds_count + b.violation_count);
        if b.asserted {
            assert_eq!(b.violation_count, 0, "{} must have zero violations", b.id);
            asserted += 1;
        }
    }
    assert_eq!(asserted, 20);

    // T13 is censused, not asserted: the stated floor is exact through
    // n = 6 and fails at n = 7 on exactly the 840 labelings of the spider
    // with three length-2 legs (graph6 minimum F?LS_, value 72 < 78).
    let t13 = rep.bound(BoundId::T13_L).unwrap();
    for n in 2..=6u32 {
        assert_eq!(t13.violations_per_n.get(&n), None, "T13 exact to n = 6");
    }
    assert_eq!(t13.violation_count, 840);
    assert_eq!(t13.violations_per_n.get(&7), Some(&840));
    assert_eq!(
        t13.violation_witnesses.get(&7).and_then(|w| w.first()),
        Some(&"F?LS_".to_string())
    );
    println!(
        "REPORTED discrepancy: T13_L (xi_c >= (2n-1)(n-1)) fails on 840 labeled graphs \
         at n = 7 — the spider tree F?LS_ has xi_c = 72 < 78; censused, not asserted"
    );

    let within_target = rep.elapsed_ms < 60_000;
    criterion(
        3,
        within_target,
        &format!(
            "all {} connected labelled graphs with 2 ≤ n ≤ 7 swept in {} ms \
             (target < 60000); zero violations across the 20 asserted bounds \
             incl. T12 on {} complement-connected graphs; T13 censused with its \
             oracle-fixed n = 7 counterexample census",
            rep.total_graphs,
            rep.elapsed_ms,
            rep.bound(BoundId::T12_NG).unwrap().graphs_checked,
        ),
    );
}

#[test]
fn criterion_4_printed_form_regressions() {
    let rep = full_sweep();

    // T1ii as printed is violated by every K_n, 3 ≤ n ≤ 7, listed as fixed
    // regression probes in the report.
    assert_eq!(rep.regressions.len(), 5);
    for (probe, expect_n) in rep.regressions.iter().zip(3u32..=7) {
        assert_eq!(probe.n, expect_n);
        assert_eq!(probe.bound, BoundId::T1ii_stated_U);
        assert!(!probe.holds, "K_{expect_n} must violate the stated form");
        let complete = FamilySpec::Complete { n: expect_n }.build().unwrap();
        assert_eq!(probe.graph6, emit_graph6(&complete));
        // Direct check agrees with the probe.
        let inv = compute_all(&complete).unwrap();
        let c = check(&complete, &inv, BoundId::T1ii_stated_U).unwrap();
        assert!(!c.holds);
    }

    // The T7 stated-form census is emitted without assertion either way.
    let t7 = rep.bound(BoundId::T7_stated_L).unwrap();
    println!(
        "T7_stated census (no assertion): checked={} holds={} violations={} \
         radicand nonpositive (trivially satisfied)={}",
        t7.graphs_checked, t7.holds_count, t7.violation_count, t7.trivially_satisfied_count
    );
    assert!(!BoundId::T7_stated_L.asserted());

    criterion(
        4,
        true,
        "T1ii_stated_U violated on every K_n, 3 ≤ n ≤ 7 (report regression probes + \
         direct checks); T7_stated census emitted without assertion",
    );
}

#[test]
fn criterion_5_equality_censuses() {
    let rep = full_sweep();

    // T13: equality exactly on stars through n = 6 (n labeled stars each);
    // at n = 7 the double star ties the value, so the census is 7 stars +
    // 420 ties and the audit reports the failures.
    let t13 = rep.bound(BoundId::T13_L).unwrap();
    for n in 3..=6u32 {
        assert_eq!(t13.equality_per_n.get(&n), Some(&(n as u64)));
    }
    assert_eq!(t13.equality_per_n.get(&7), Some(&427));
    assert_eq!(t13.agreement_failures_per_n.get(&7), Some(&420));
    for n in 3..=7u32 {
        let star = FamilySpec::Star { n }.build().unwrap();
        let inv = compute_all(&star).unwrap();
        let c = check(&star, &inv, BoundId::T13_L).unwrap();
        assert!(c.is_equality, "S_{n} achieves the stated floor");
    }
    println!(
        "REPORTED audit: T13 equality is NOT exactly the stars at n = 7 — 420 double-star \
         labelings tie the value 78 (witnesses {:?})",
        t13.agreement_failure_witnesses.get(&7).map(|w| &w[..2])
    );

    // T4: equality census = all K_n − je instances (j ≥ 0) plus the paths
    // P2–P4; cross-checked against the combinatorial count of labelled
    // partial matchings. Paths with n ≥ 5 are audit failures (claimed but
    // not achieved): exactly the n!/2 path labelings.
    let t4 = rep.bound(BoundId::T4_U).unwrap();
    let mut expected = Vec::new();
    for n in 2u64..=7 {
        let mut count: u64 = (0..=n / 2)
            .map(|j| {
                // K_2 minus its only edge is disconnected: not in the sweep.
                if n == 2 && j == 1 {
                    0
                } else {
                    labeled_matchings(n, j)
                }
            })
            .sum();
        if n == 4 {
            count += 12; // the labelled 4-paths, the only extra equality family
        }
        expected.push((n as u32, count));
    }
    for (n, count) in expected {
        assert_eq!(
            t4.equality_per_n.get(&n).copied().unwrap_or(0),
            count,
            "T4 equality census at n = {n}"
        );
    }
    for n in 3u32..=7 {
        for j in 1..=n / 2 {
            let g = FamilySpec::CompleteMinusMatching { n, j }.build().unwrap();
            let inv = compute_all(&g).unwrap();
            let c = check(&g, &inv, BoundId::T4_U).unwrap();
            assert!(c.is_equality, "K_{n} - {j}e achieves T4 equality");
        }
    }
    for n in 2u32..=7 {
        let g = FamilySpec::Path { n }.build().unwrap();
        let inv = compute_all(&g).unwrap();
        let c = check(&g, &inv, BoundId::T4_U).unwrap();
        assert_eq!(c.is_equality, n <= 4, "P_{n} equality holds only to n = 4");
    }
    assert_eq!(t4.agreement_failures_per_n.get(&5), Some(&60));
    assert_eq!(t4.agreement_failures_per_n.get(&6), Some(&360));
    assert_eq!(t4.agreement_failures_per_n.get(&7), Some(&2520));
    println!(
        "REPORTED audit: the T4 path clause fails from n = 5 (P5: 42 < 46); audit \
         failures are exactly the n!/2 path labelings for n = 5, 6, 7"
    );

    // T5i: equality exactly on the complete graphs (one per n, no audit
    // failures).
    let t5i = rep.bound(BoundId::T5i_L).unwrap();
    for n in 2..=7u32 {
        assert_eq!(t5i.equality_per_n.get(&n), Some(&1));
        let expected_g6 = emit_graph6(&FamilySpec::Complete { n }.build().unwrap());
        assert_eq!(t5i.equality_witnesses.get(&n).unwrap(), &vec![expected_g6]);
    }
    assert_eq!(t5i.agreement_failure_count, 0);

    // T12: equality on C5 with value 80 = 80, and the all-eccentricity-2
    // condition is exact across the sweep (zero audit failures; the 12
    // labelled 5-cycles are the whole n = 5 equality census).
    let c5 = FamilySpec::Cycle { n: 5 }.build().unwrap();
    let ng = check_nordhaus_gaddum(&c5).unwrap();
    assert!(ng.is_equality);
    assert_eq!((ng.lhs.as_str(), ng.rhs.as_str()), ("80", "80"));
    let t12 = rep.bound(BoundId::T12_NG).unwrap();
    assert_eq!(t12.equality_per_n.get(&5), Some(&12));
    assert_eq!(t12.agreement_failure_count, 0);

    // Thm 5(ii) audit: true equality set is {P2}; the claimed P3 fails in
    // both directions (P2 unclaimed, the 3 labelled P3's claimed but
    // strict: 10 > 6).
    let t5ii = rep.bound(BoundId::T5ii_L).unwrap();
    assert_eq!(t5ii.equality_count, 1);
    assert_eq!(t5ii.equality_per_n.get(&2), Some(&1));
    assert_eq!(t5ii.agreement_failures_per_n.get(&2), Some(&1));
    assert_eq!(t5ii.agreement_failures_per_n.get(&3), Some(&3));
    let p3 = FamilySpec::Path { n: 3 }.build().unwrap();
    let inv = compute_all(&p3).unwrap();
    assert_eq!((inv.xi_c, inv.xi_cc), (10, 6));
    println!(
        "REPORTED audit: the xi_c >= xi^c equality condition names P3, but P3 gives \
         10 > 6; the true equality set in the sweep is {{P2}}"
    );

    // Thm 10 audit: equality is achieved by every regular graph, not just
    // the single edge. The census equals an independently computed count
    // of connected regular labelled graphs.
    let t10 = rep.bound(BoundId::T10_L).unwrap();
    for n in 2usize..=7 {
        let mut regular = 0u64;
        let nbits = n * (n - 1) / 2;
        for mask in 0..1u64 << nbits {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            let d0 = g.degree(0);
            if (1..n).all(|v| g.degree(v) == d0) {
                regular += 1;
            }
        }
        assert_eq!(
            t10.equality_per_n.get(&(n as u32)).copied().unwrap_or(0),
            regular,
            "T10 equality census = connected regular census at n = {n}"
        );
    }
    assert_eq!(t10.agreement_failure_count, t10.equality_count - 1);
    println!(
        "REPORTED audit: T10 equality holds on every regular graph ({} of them in the \
         sweep), not only the single edge",
        t10.equality_count
    );

    criterion(
        5,
        true,
        "equality censuses frozen: T13 stars (+420 reported n=7 ties), T4 matchings + \
         P2–P4 (path claim reported inexact from n=5), T5i exactly K_n, T12 equality \
         on C5 at 80 = 80; Thm 5(ii) and Thm 10 audit failures reported with witnesses",
    );
}

#[test]
fn criterion_6_identity_suite() {
    let rep = full_sweep();
    assert_eq!(rep.identities.graphs_checked, rep.total_graphs);
    assert_eq!(rep.identities.failures, 0, "{:?}", rep.identities.witnesses);
    // The 1% independent recomputation of xi_c found no disagreement.
    assert!(rep.oracle.samples > 10_000);
    assert_eq!(rep.oracle.mismatches, 0, "{:?}", rep.oracle.witnesses);
    criterion(
        6,
        true,
        &format!(
            "structural identities exact on all {} swept graphs (Σδ=M1, Σdegδ=2M2, \
             ξ_c ≥ ξ^c, W ≥ H, r ≤ d ≤ 2r, per-vertex eccentricity bounds, collapse \
             laws); edge-sum form asserted inside the kernel on every graph; {} \
             independent ξ_c recomputations all agree",
            rep.identities.graphs_checked, rep.oracle.samples
        ),
    );
}

#[test]
fn criterion_7_format_fidelity() {
    // graph6 round-trip identity over every graph (connected or not) with
    // n ≤ 6.
    let mut count = 0u64;
    for n in 1..=6usize {
        let nbits = n * (n - 1) / 2;
        for mask in 0..1u64 << nbits {
            let g = Graph::from_edge_mask(n, mask).unwrap();
            let s = emit_graph6(&g);
            assert_eq!(parse_graph6(&s).unwrap(), g);
            count += 1;
        }
    }

    // CLI reports parse as JSON with the documented shape.
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut stdin = std::io::Cursor::new(b"C~\n".to_vec());
    let code = meci::cli::run_with_io(
        ["meci", "compute", "--format", "graph6", "-"]
            .into_iter()
            .map(String::from),
        &mut stdin,
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    for key in [
        "n",
        "m",
        "max_degree",
        "min_degree",
        "radius",
        "diameter",
        "theta",
        "m1",
        "m2",
        "e1",
        "e2",
        "wiener",
        "harary",
        "xi_c",
        "xi_cc",
        "profile",
    ] {
        assert!(v.get(key).is_some(), "compute output must carry {key}");
    }
    assert_eq!(v["xi_c"], 36);
    assert!(v["harary"]["num"].is_i64());
    assert!(v["harary"]["den"].is_i64());
    assert!(v["harary"]["decimal"].is_string());

    criterion(
        7,
        true,
        &format!(
            "graph6 round-trip identity on all {count} graphs with n ≤ 6; CLI JSON \
             output schema-validated"
        ),
    );
}
