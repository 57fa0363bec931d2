//! The seven rooted 4-vertex flags of the certificate.
//!
//! Vertex 0 is the root and `a, b, c` are 1, 2, 3. Edge sets:
//!
//! | flag | edges | shape |
//! |------|-------|-------|
//! | F1 | none | empty |
//! | F2 | bc | one edge away from the root |
//! | F3 | rc, ac, bc | claw centred at a non-root vertex |
//! | F4 | ra, rb, rc | claw centred at the root |
//! | F5 | rb, rc, ac, bc | triangle on the root with a pendant edge |
//! | F6 | rb, rc, ab, ac | 4-cycle through the root |
//! | F7 | all but ra | `K_4` minus an edge at the root |

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FlagId {
    F(u8),
    NonListed,
}

impl FlagId {
    /// Zero-based coordinate in the flag vector.
    pub fn index(self) -> Option<usize> {
        match self {
            FlagId::F(i) => Some(i as usize - 1),
            FlagId::NonListed => None,
        }
    }
}

impl fmt::Display for FlagId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlagId::F(i) => write!(f, "F{i}"),
            FlagId::NonListed => f.write_str("non-listed"),
        }
    }
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Edge sets of F1..F7 with root 0.
pub fn flag_edges(i: usize) -> &'static [(usize, usize)] {
    const FLAGS: [&[(usize, usize)]; 7] = [
        &[],
        &[(2, 3)],
        &[(0, 3), (1, 3), (2, 3)],
        &[(0, 1), (0, 2), (0, 3)],
        &[(0, 2), (0, 3), (1, 3), (2, 3)],
        &[(0, 2), (0, 3), (1, 2), (1, 3)],
        &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    ];
    FLAGS[i]
}

fn mask_of(edges: &[(usize, usize)]) -> u8 {
    edges.iter().fold(0, |m, &(u, v)| {
        let k = PAIRS.iter().position(|&p| p == (u.min(v), u.max(v))).expect("pair in K4");
        m | 1 << k
    })
}

/// Applies a permutation of the non-root vertices to a 6-bit pair mask.
fn permute_mask(mask: u8, perm: [usize; 4]) -> u8 {
    let mut out = 0;
    for (k, &(u, v)) in PAIRS.iter().enumerate() {
        if mask >> k & 1 == 1 {
            let (a, b) = (perm[u], perm[v]);
            let idx = PAIRS.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
            out |= 1 << idx;
        }
    }
    out
}

const NON_ROOT_PERMS: [[usize; 4]; 6] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
];

/// Flag of every rooted pair mask, by rooted isomorphism.
fn table() -> &'static [FlagId; 64] {
    static TABLE: OnceLock<[FlagId; 64]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [FlagId::NonListed; 64];
        for i in 0..7 {
            let base = mask_of(flag_edges(i));
            for p in NON_ROOT_PERMS {
                t[permute_mask(base, p) as usize] = FlagId::F(i as u8 + 1);
            }
        }
        t
    })
}

/// Pair mask of `h` rooted at `root`, with the other vertices in ascending order.
pub(crate) fn rooted_mask(h: &Graph, vertices: [usize; 4]) -> u8 {
    let mut m = 0;
    for (k, &(u, v)) in PAIRS.iter().enumerate() {
        if h.has_edge(vertices[u], vertices[v]) {
            m |= 1 << k;
        }
    }
    m
}

#[inline]
pub(crate) fn classify_mask(mask: u8) -> FlagId {
    table()[mask as usize]
}

pub fn classify_rooted_flag(h: &Graph, root: usize) -> Result<FlagId> {
    if h.order() != 4 {
        return Err(Error::OrderOutOfRange { n: h.order(), min: 4, max: 4 });
    }
    if root >= 4 {
        return Err(Error::VertexOutOfRange { v: root, n: 4 });
    }
    let mut vs = [root, 0, 0, 0];
    let mut k = 1;
    for v in 0..4 {
        if v != root {
            vs[k] = v;
            k += 1;
        }
    }
    Ok(classify_mask(rooted_mask(h, vs)))
}
