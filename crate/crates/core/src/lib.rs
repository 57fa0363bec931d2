//! Exact tools for decomposing graph edge sets into single edges and
//! triangles.
//!
//! The crate computes integral decomposition costs through exact maximum
//! triangle packings, the fractional relaxation through an exact rational
//! simplex solver, explicit extremal decompositions built from Steiner
//! triple systems, and an exact re-check of a flag-algebra certificate over
//! all seven-vertex graphs.
//!
//! Every reported value is an exact rational; floating point only appears
//! in [`flagcert::lambda2`], whose bracketing endpoints are still certified
//! by exact eigenvalue counts.

pub mod constructions;
pub mod decomp;
pub mod error;
pub mod flagcert;
pub mod frontier;
pub mod graph;
pub mod lp;
pub mod rational;

pub use decomp::{Cover, Decomposition, PackingResult, Part};
pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, Triangle};
pub use rational::Rational;
