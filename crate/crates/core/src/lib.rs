//! Topology of complements of affine line arrangements in ℝⁿ.
//!
//! The complement of `d` distinct lines with `tᵢ` multiple points of
//! multiplicity `i` is determined by `g = d + Σ (i − 1)·tᵢ` alone. This crate
//! computes `g` and the predicted topology ([`arrangement`]), reads the same
//! data back from the intersection poset ([`poset`]), replays the height-sweep
//! handle decomposition as a checkable trace ([`sweep`]), and checks the
//! predictions against brute-force oracles ([`verifier`]).

pub mod arrangement;
pub mod fixtures;
pub mod generate;
pub mod geometry;
pub mod io;
pub mod poset;
pub mod rat_serde;
pub mod sweep;
pub mod verifier;

pub use arrangement::{Arrangement, ArrangementError, InvariantReport, MultiplePoint};
pub use geometry::{Line, PointN, Rat};
pub use poset::IntersectionPoset;
pub use sweep::{HandleTrace, SpaceGraph, SweepPlan};
