//! Exact computation and exhaustive verification for the modified eccentric
//! connectivity index of small simple connected graphs.
//!
//! The index is `ξ_c(G) = Σ_v δ(v)·ε(v)`, where `δ(v)` is the sum of the
//! degrees of the neighbours of `v` and `ε(v)` is the eccentricity of `v`.
//! This crate provides:
//!
//! - [`graph`] — an immutable bit-set graph (`n ≤ 64`) with edge-list and
//!   graph6 I/O, connectivity, and complementation.
//! - [`invariants`] — every invariant the bound catalogue needs (degrees,
//!   eccentricities, Zagreb indices, Wiener and Harary indices, `ξ_c`, `ξ^c`),
//!   all in exact arithmetic.
//! - [`families`] — generators for named parametric families (complete,
//!   cycle, hypercube, prism, antiprism, pyramid, bipyramid, star, complete
//!   multipartite, complete-minus-matching) paired with closed-form
//!   predictions for `ξ_c` and a built-in discrepancy list for predictions
//!   that direct evaluation refutes.
//! - [`bounds`] — a catalogue of upper/lower bounds on `ξ_c` evaluated as
//!   exact predicates with equality detection and equality-condition audits,
//!   including corrected variants of statements that fail as printed.
//! - [`enumerate`] — exhaustive streaming of all connected labelled graphs up
//!   to a vertex budget (or of external graph6 files), data-parallel bound
//!   sweeps, and a deterministic [`enumerate::VerificationReport`].
//! - [`cli`] — the `meci` command-line front end (`compute`, `family`,
//!   `verify`, `sweep`).
//!
//! # Examples
//!
//! One runnable example per capability lives in `examples/`:
//!
//! ```text
//! cargo run --release --example compute_invariants
//! cargo run --release --example family_closed_forms
//! cargo run --release --example check_bounds
//! cargo run --release --example equality_census
//! cargo run --release --example nordhaus_gaddum
//! cargo run --release --example sweep_verification
//! cargo run --release --example graph6_io
//! ```
//!
//! # Quick start
//!
//! ```
//! use meci::families::FamilySpec;
//! use meci::invariants::compute_all;
//!
//! let g = FamilySpec::Cycle { n: 5 }.build().unwrap();
//! let inv = compute_all(&g).unwrap();
//! assert_eq!(inv.xi_c, 40);
//! assert_eq!(inv.xi_cc, 20);
//! ```

pub mod bounds;
pub mod cli;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod invariants;

pub use bounds::{check, check_all, check_nordhaus_gaddum, BoundCheck, BoundId};
pub use enumerate::{connected_labeled_graphs, sweep, SweepConfig, VerificationReport};
pub use families::{ClosedFormResult, ClosedFormStatus, FamilySpec};
pub use graph::{EdgeList, Graph};
pub use invariants::{compute_all, InvariantSet};
