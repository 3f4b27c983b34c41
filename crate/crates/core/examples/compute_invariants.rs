//! Compute the full invariant set of a graph, both from an explicit edge
//! list and from a named family.
//!
//! ```text
//! cargo run --release --example compute_invariants
//! ```

use meci::families::FamilySpec;
use meci::graph::{EdgeList, Graph};
use meci::invariants::compute_all;

fn main() {
    // The 4-path, built by hand.
    let p4 = Graph::from_edge_list(&EdgeList {
        n: 4,
        edges: vec![(0, 1), (1, 2), (2, 3)],
    })
    .unwrap();
    let inv = compute_all(&p4).unwrap();
    println!("P4:");
    println!("  xi_c (modified index)  = {}", inv.xi_c);
    println!("  xi^c (classic index)   = {}", inv.xi_cc);
    println!("  M1 = {}, M2 = {}", inv.m1, inv.m2);
    println!("  W  = {}, H  = {}", inv.wiener, inv.harary);
    println!("  radius = {}, diameter = {}", inv.radius, inv.diameter);
    println!("  eccentricities         = {:?}", inv.profile.eccentricity);
    println!("  neighbour degree sums  = {:?}", inv.profile.neighbor_degree_sum);

    // The Petersen-adjacent families come from generators; the full set
    // serializes to JSON.
    let prism = FamilySpec::Prism { m: 5 }.build().unwrap();
    let inv = compute_all(&prism).unwrap();
    println!("\nprism:5 as JSON:");
    println!("{}", serde_json::to_string_pretty(&inv).unwrap());
}
