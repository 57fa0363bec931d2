//! Fractional decompositions: weights in `[0, 1]` on edges and triangles
//! such that each edge's own weight plus the weights of the triangles
//! through it is at least 1, at cost `2 (edge mass) + 3 (triangle mass)`.
//!
//! The all-edges point gives the upper bound `2e`; putting dual value 1 on
//! every edge is dual feasible (a triangle's three edges sum to its cost 3),
//! which gives the lower bound `e`.

use num_traits::{One, Zero};

use super::simplex::{lp_solve_min, LinearProgram, LpOutcome, Sense};
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::rational::{int, Rational};

/// Orders above this make the exact tableau impractically large.
pub const MAX_FRACTIONAL_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct FractionalWeights {
    pub host: Graph,
    pub edges: Vec<((usize, usize), Rational)>,
    pub triangles: Vec<(Triangle, Rational)>,
}

impl FractionalWeights {
    pub fn cost(&self) -> Rational {
        let e: Rational = self.edges.iter().map(|(_, w)| w).sum();
        let t: Rational = self.triangles.iter().map(|(_, w)| w).sum();
        int(2) * e + int(3) * t
    }

    /// Exact check of the weight range and of every coverage inequality;
    /// returns the first under-covered edge on failure.
    pub fn check(&self) -> Result<()> {
        let zero = Rational::zero();
        let one = Rational::one();
        let in_range = |w: &Rational| *w >= zero && *w <= one;
        if !self.edges.iter().all(|(_, w)| in_range(w)) || !self.triangles.iter().all(|(_, w)| in_range(w)) {
            return Err(Error::InvalidArgument("fractional weight outside [0, 1]".into()));
        }
        for ((u, v), w) in &self.edges {
            let cover: Rational = w + self
                .triangles
                .iter()
                .filter(|(t, _)| t.contains_pair(*u, *v))
                .map(|(_, tw)| tw)
                .sum::<Rational>();
            if cover < one {
                return Err(Error::Uncovered { u: *u, v: *v });
            }
        }
        Ok(())
    }

    /// The coverage LP: variables are the edges followed by the triangles.
    pub fn linear_program(g: &Graph) -> LinearProgram {
        let edges = g.edges();
        let tris = g.triangles();
        let nv = edges.len() + tris.len();
        let mut lp = LinearProgram::new(nv);
        for j in 0..nv {
            lp.objective[j] = int(if j < edges.len() { 2 } else { 3 });
            lp.upper[j] = Some(Rational::one());
        }
        for (k, &(u, v)) in edges.iter().enumerate() {
            let mut row = vec![Rational::zero(); nv];
            row[k] = Rational::one();
            for (j, t) in tris.iter().enumerate() {
                if t.contains_pair(u, v) {
                    row[edges.len() + j] = Rational::one();
                }
            }
            lp.add_constraint(row, Sense::Ge, Rational::one());
        }
        lp
    }
}

/// Exact minimum fractional decomposition cost, with an optimal weighting.
pub fn pi3f(g: &Graph) -> Result<(Rational, FractionalWeights)> {
    if g.order() > MAX_FRACTIONAL_ORDER {
        return Err(Error::TooLarge(format!(
            "fractional LP limited to {MAX_FRACTIONAL_ORDER} vertices, got {}",
            g.order()
        )));
    }
    let edges = g.edges();
    let tris = g.triangles();
    if tris.is_empty() {
        // Only edge parts are available, each must carry weight 1.
        let w = FractionalWeights {
            host: g.clone(),
            edges: edges.into_iter().map(|e| (e, Rational::one())).collect(),
            triangles: vec![],
        };
        return Ok((w.cost(), w));
    }
    let lp = FractionalWeights::linear_program(g);
    let LpOutcome::Optimal { value, x } = lp_solve_min(&lp)? else {
        unreachable!("the all-edges point is feasible and the objective is nonnegative");
    };
    let (xe, xt) = x.split_at(edges.len());
    let w = FractionalWeights {
        host: g.clone(),
        edges: edges.into_iter().zip(xe.iter().cloned()).collect(),
        triangles: tris.into_iter().zip(xt.iter().cloned()).collect(),
    };
    w.check()?;
    debug_assert_eq!(w.cost(), value);
    Ok((value, w))
}
