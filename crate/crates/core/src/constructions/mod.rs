//! Closed-form extremal values, the predicted extremal families, and
//! explicit decompositions of complete graphs and their relatives.

mod complete;
mod formulas;
mod sts;

pub use complete::{covering_complete, decompose_complete, decompose_complete_with_budget, decompose_matching_removed};
pub use formulas::{ell, extremal_family_alpha, t2, wfun, ExtremalPrediction, FamilyMember};
pub use sts::{steiner_triple_system, TripleSystem};
