//! Exact rational linear programming and the fractional edge/triangle
//! decomposition cost.

mod fractional;
mod simplex;

pub use fractional::{pi3f, FractionalWeights, MAX_FRACTIONAL_ORDER};
pub use simplex::{lp_solve_min, Constraint, LinearProgram, LpOutcome, Sense};
