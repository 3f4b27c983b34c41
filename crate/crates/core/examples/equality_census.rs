//! Census the equality cases of the bound catalogue over small graphs and
//! show where the claimed equality conditions are inexact.
//!
//! Four claims fail as commonly stated, each witnessed here:
//! - `xi_c >= xi^c` claims equality iff the 3-path; the true equality set
//!   is the single edge.
//! - the geometric-mean bound T10 claims equality iff the single edge; all
//!   regular graphs achieve it.
//! - the T4 equality family claims every path; it stops at P4.
//! - the T13 floor claims equality iff the star; from n = 7 the double
//!   star ties it (and the spider drops below).
//!
//! ```text
//! cargo run --release --example equality_census
//! ```

use meci::bounds::BoundId;
use meci::enumerate::{sweep, SweepConfig};

fn main() {
    let rep = sweep(&SweepConfig::default()).unwrap();

    let show = |id: BoundId, claim: &str| {
        let b = rep.bound(id).unwrap();
        println!("{id}: {}", b.description);
        println!("  claimed equality condition: {claim}");
        println!(
            "  equality cases per n: {:?} (total {})",
            b.equality_per_n, b.equality_count
        );
        println!(
            "  audit failures per n:  {:?} (total {})",
            b.agreement_failures_per_n, b.agreement_failure_count
        );
        if let Some((n, w)) = b.agreement_failure_witnesses.iter().next() {
            println!("  example disagreeing graphs at n={n}: {:?}", &w[..w.len().min(3)]);
        }
        println!();
    };

    show(BoundId::T5ii_L, "the 3-path (actual: the single edge only)");
    show(BoundId::T10_L, "the single edge (actual: every regular graph)");
    show(
        BoundId::T4_U,
        "complete-minus-matching or any path (actual: paths only up to P4)",
    );
    show(
        BoundId::T13_L,
        "the star (actual: stars, plus double-star ties from n = 7; the floor itself \
         fails on the spider)",
    );
    show(BoundId::T2_U, "regular graphs (actual: wider; minimum-degree-1 ties exist)");

    // Conditions that the censuses confirm exactly at this scale.
    for (id, claim) in [
        (BoundId::T5i_L, "complete graphs"),
        (BoundId::T8_L, "complete graphs"),
        (BoundId::T11_L, "complete graphs"),
        (BoundId::C2_L, "complete graphs"),
        (BoundId::T3_U, "regular and self-centered"),
        (BoundId::T6_L, "regular and self-centered"),
        (BoundId::T12_NG, "eccentricity 2 everywhere on both sides"),
    ] {
        let b = rep.bound(id).unwrap();
        println!(
            "{id}: equality iff {claim} — exact here ({} equality cases, {} audit failures)",
            b.equality_count, b.agreement_failure_count
        );
    }
}
