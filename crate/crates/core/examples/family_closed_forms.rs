//! Compare BFS-computed values of ξ_c against the closed-form predictions
//! for every named family, including the two predictions that direct
//! evaluation refutes (the pyramid everywhere, the bipyramid at n = 3).
//!
//! ```text
//! cargo run --release --example family_closed_forms
//! ```

use meci::families::{ClosedFormStatus, FamilySpec};
use meci::invariants::compute_all;

fn main() {
    let specs: Vec<FamilySpec> = vec![
        "complete:5".parse().unwrap(),
        "cycle:6".parse().unwrap(),
        "hypercube:3".parse().unwrap(),
        "prism:3".parse().unwrap(),
        "prism:4".parse().unwrap(),
        "antiprism:3".parse().unwrap(),
        "antiprism:4".parse().unwrap(),
        "pyramid:3".parse().unwrap(),
        "pyramid:4".parse().unwrap(),
        "pyramid:5".parse().unwrap(),
        "bipyramid:3".parse().unwrap(),
        "bipyramid:4".parse().unwrap(),
        "star:7".parse().unwrap(),
        "multipartite:2,3,3".parse().unwrap(),
        "multipartite:2,2,2".parse().unwrap(),
        "kminusmatching:6,3".parse().unwrap(),
        "path:5".parse().unwrap(),
    ];

    println!(
        "{:<22} {:>4} {:>4} {:>9} {:>9}  status",
        "family", "n", "m", "computed", "predicted"
    );
    for spec in specs {
        let g = spec.build().unwrap();
        let inv = compute_all(&g).unwrap();
        let cf = spec.closed_form_xi_c().unwrap();
        let predicted = cf
            .predicted
            .map(|p| p.to_string())
            .unwrap_or_else(|| "-".into());
        let status = match cf.status {
            ClosedFormStatus::Confirmed => "CONFIRMED",
            ClosedFormStatus::KnownDiscrepancy => "KNOWN_DISCREPANCY",
            ClosedFormStatus::NoFormula => "NO_FORMULA",
        };
        println!(
            "{:<22} {:>4} {:>4} {:>9} {:>9}  {}",
            spec.to_string(),
            inv.n,
            inv.m,
            inv.xi_c,
            predicted,
            status
        );
        if cf.status == ClosedFormStatus::KnownDiscrepancy {
            println!("    note: {}", cf.note);
        }
    }
}
