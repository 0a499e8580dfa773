//! Constructive covering numbers.
//!
//! The toolkit builds certified coverings of a flat torus by translates of a
//! body and of the unit sphere by rotated copies of a set. Both pipelines
//! follow the same recipe: replace the region by a finite δ-net, pose a finite
//! set-cover instance over candidate copies, solve it greedily, and certify
//! the greedy output against the fractional optimum (the Lovász–Stein
//! guarantee). Closed-form density bounds are evaluated alongside every run
//! for comparison.

pub mod acceptance;
pub mod bounds;
pub mod error;
pub mod euclid;
pub mod hypercover;
pub mod lp;
pub mod report;
pub mod rng;
pub mod sphere;
pub mod vecn;

pub use error::{CoverError, Result};
pub use report::CoverReport;
