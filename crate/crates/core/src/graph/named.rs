use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedKind {
    /// K_n.
    Complete,
    /// Balanced complete bipartite graph with parts of sizes floor(n/2), ceil(n/2).
    Turan2,
    /// K_n minus one edge.
    CompleteMinusEdge,
    /// K_n minus `m` pairwise disjoint edges `(0,1), (2,3), ...`.
    CompleteMinusMatching,
}

impl FromStr for NamedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "complete" => NamedKind::Complete,
            "turan2" => NamedKind::Turan2,
            "complete_minus_edge" => NamedKind::CompleteMinusEdge,
            "complete_minus_matching" => NamedKind::CompleteMinusMatching,
            other => return Err(Error::InvalidArgument(format!("unknown graph family {other:?}"))),
        })
    }
}

impl fmt::Display for NamedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NamedKind::Complete => "complete",
            NamedKind::Turan2 => "turan2",
            NamedKind::CompleteMinusEdge => "complete_minus_edge",
            NamedKind::CompleteMinusMatching => "complete_minus_matching",
        })
    }
}

/// `m` is only read for [`NamedKind::CompleteMinusMatching`], where it defaults to 2.
pub fn make_named(kind: NamedKind, n: usize, m: Option<usize>) -> Result<Graph> {
    if n == 0 {
        return Err(Error::OrderOutOfRange { n, min: 1, max: super::MAX_ORDER });
    }
    let complete = Graph::empty(n)?.complement();
    Ok(match kind {
        NamedKind::Complete => complete,
        NamedKind::Turan2 => {
            let half = n / 2;
            let mut g = Graph::empty(n)?;
            for u in 0..half {
                for v in half..n {
                    g.add_edge(u, v);
                }
            }
            g
        }
        NamedKind::CompleteMinusEdge => {
            if n < 2 {
                return Err(Error::InvalidArgument("K_1 has no edge to remove".into()));
            }
            let mut g = complete;
            g.remove_edge(0, 1);
            g
        }
        NamedKind::CompleteMinusMatching => {
            let m = m.unwrap_or(2);
            if 2 * m > n {
                return Err(Error::InvalidArgument(format!(
                    "matching of size {m} does not fit in {n} vertices"
                )));
            }
            let mut g = complete;
            for i in 0..m {
                g.remove_edge(2 * i, 2 * i + 1);
            }
            g
        }
    })
}
