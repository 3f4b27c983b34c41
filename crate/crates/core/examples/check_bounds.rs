//! Evaluate the whole bound catalogue on a few graphs and print one line
//! per check: exact sides, holds/equality flags, and the equality-condition
//! audit.
//!
//! ```text
//! cargo run --release --example check_bounds
//! ```

use meci::bounds::check_all_with_skips;
use meci::families::FamilySpec;
use meci::graph::parse_graph6;

fn show(name: &str, g: &meci::graph::Graph) {
    println!("== {name} ==");
    let (checks, skipped) = check_all_with_skips(g).unwrap();
    println!(
        "{:<18} {:>16} {:>16} {:>6} {:>3} {:>5} {:>6}",
        "bound", "lhs", "rhs", "holds", "eq", "pred", "agree"
    );
    for c in &checks {
        let opt = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_else(|| "-".into());
        println!(
            "{:<18} {:>16} {:>16} {:>6} {:>3} {:>5} {:>6}",
            c.id.to_string(),
            c.lhs,
            c.rhs,
            c.holds,
            if c.is_equality { "=" } else { " " },
            opt(c.predicted_equality),
            opt(c.agreement),
        );
    }
    for s in &skipped {
        println!("{:<18} skipped: {}", s.id.to_string(), s.note);
    }
    println!();
}

fn main() {
    let k4 = FamilySpec::Complete { n: 4 }.build().unwrap();
    show("K4 (only the stated T1ii upper form fails)", &k4);

    let s4 = FamilySpec::Star { n: 4 }.build().unwrap();
    show("S4 (T13 floor met with equality)", &s4);

    // The spider with three length-2 legs: the counterexample to the
    // stated star-minimality floor.
    let spider = parse_graph6("F?LS_").unwrap();
    show("spider S(2,2,2) on 7 vertices (drops below the T13 floor)", &spider);
}
