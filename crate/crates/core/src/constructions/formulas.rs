use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{make_named, Graph, NamedKind};
use crate::rational::{int, Rational};

/// Largest decomposition cost among `K_n` and the balanced complete
/// bipartite graph, taken as the extremal value for large `n`.
pub fn ell(n: u64) -> u64 {
    let sq = n * n;
    match n % 6 {
        0 | 2 => sq / 2,
        4 => sq / 2 + 1,
        _ => (sq - 1) / 2,
    }
}

/// Excess over `C(n, 2)` of the cost of the near-complete extremal graphs.
pub fn wfun(n: u64) -> u64 {
    match n % 6 {
        0 | 2 => n / 2,
        1 | 3 => 2,
        4 => n / 2 + 1,
        _ => 4,
    }
}

/// Edge count of the balanced complete bipartite graph, `floor(n^2 / 4)`.
pub fn t2(n: u64) -> u64 {
    n * n / 4
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FamilyMember {
    Turan2,
    Complete,
    CompleteMinusEdge,
    /// `K_n` minus a matching of the given size.
    CompleteMinusMatching(usize),
}

impl FamilyMember {
    /// `None` when the graph does not exist at this order.
    pub fn build(&self, n: usize) -> Result<Option<Graph>> {
        Ok(match *self {
            FamilyMember::Turan2 => Some(make_named(NamedKind::Turan2, n, None)?),
            FamilyMember::Complete => Some(make_named(NamedKind::Complete, n, None)?),
            FamilyMember::CompleteMinusEdge if n >= 2 => Some(make_named(NamedKind::CompleteMinusEdge, n, None)?),
            FamilyMember::CompleteMinusMatching(m) if 2 * m <= n => {
                Some(make_named(NamedKind::CompleteMinusMatching, n, Some(m))?)
            }
            _ => None,
        })
    }
}

impl fmt::Display for FamilyMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyMember::Turan2 => f.write_str("T2(n)"),
            FamilyMember::Complete => f.write_str("K_n"),
            FamilyMember::CompleteMinusEdge => f.write_str("K_n^-"),
            FamilyMember::CompleteMinusMatching(2) => f.write_str("K_n^="),
            FamilyMember::CompleteMinusMatching(m) => write!(f, "K_n minus {m}-matching"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalPrediction {
    pub n: usize,
    #[serde(serialize_with = "crate::rational::serde_display")]
    pub alpha: Rational,
    pub family: Vec<FamilyMember>,
    pub validity: &'static str,
}

impl ExtremalPrediction {
    /// The family members that exist at this order.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for m in &self.family {
            if let Some(g) = m.build(self.n)? {
                out.push(g);
            }
        }
        Ok(out)
    }
}

/// Predicted extremal graphs for triangle cost `alpha`, valid for all
/// sufficiently large `n` (no threshold is known).
pub fn extremal_family_alpha(n: usize, alpha: &Rational) -> ExtremalPrediction {
    use FamilyMember::*;
    let three = int(3);
    let four = int(4);
    let r = n % 6;
    let odd_class = r == 1 || r == 3;
    let family = if *alpha < three {
        vec![Turan2]
    } else if *alpha == three {
        match r {
            0 | 2 => vec![Turan2, Complete],
            4 => vec![Complete],
            _ => vec![Turan2],
        }
    } else if *alpha < four {
        if odd_class {
            vec![CompleteMinusMatching(2)]
        } else {
            vec![Complete]
        }
    } else if *alpha == four && odd_class {
        vec![Complete, CompleteMinusEdge, CompleteMinusMatching(2)]
    } else {
        vec![Complete]
    };
    ExtremalPrediction {
        n,
        alpha: alpha.clone(),
        family,
        validity: "valid for n >= n0 (unspecified)",
    }
}
