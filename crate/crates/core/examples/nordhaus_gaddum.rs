//! The complement-sum bound ξ_c(G) + ξ_c(Ḡ) ≥ 2[M₁(G) + M₁(Ḡ)] on the
//! self-complementary graphs C5 (equality: every eccentricity is 2 on both
//! sides) and P4 (strict), and its inapplicability on K4.
//!
//! ```text
//! cargo run --release --example nordhaus_gaddum
//! ```

use meci::bounds::check_nordhaus_gaddum;
use meci::families::FamilySpec;

fn main() {
    for spec in ["cycle:5", "path:4", "complete:4"] {
        let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
        match check_nordhaus_gaddum(&g) {
            Ok(c) => println!(
                "{spec:<12} lhs = {:>4}  rhs = {:>4}  holds = {}  equality = {}  \
                 all-ecc-2 on both sides = {:?}",
                c.lhs, c.rhs, c.holds, c.is_equality, c.predicted_equality
            ),
            Err(e) => println!("{spec:<12} {e}"),
        }
    }
}
