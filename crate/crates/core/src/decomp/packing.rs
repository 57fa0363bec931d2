//! Exact maximum edge-disjoint triangle packing by branch and bound.
//!
//! The search repeatedly takes the lowest undecided edge `uv` (lexicographic
//! order) and either covers it with a triangle `uvw` whose other two edges
//! are still undecided (third vertices in ascending order) or leaves it
//! uncovered for good.
//!
//! Pruning uses the undecided subgraph `R`. Any packing inside `R` leaves a
//! graph `L` with `|L| = |R| - 3t`, so `|L| = |R| mod 3`; `L` has odd degree
//! exactly where `R` does, so it has at least `odd/2` edges, and when `R` has
//! no odd vertex `L` is empty or has at least three edges. The smallest
//! `|L|` meeting all three caps `t`. Without parity this is `|R|/3`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, Triangle};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingResult {
    pub nu: usize,
    pub witness: Vec<Triangle>,
    /// Search nodes visited.
    pub nodes: u64,
}

pub fn max_triangle_packing(g: &Graph) -> Result<PackingResult> {
    max_triangle_packing_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn max_triangle_packing_with_budget(g: &Graph, budget: u64) -> Result<PackingResult> {
    let n = g.order();
    let avail: Vec<u64> = (0..n).map(|v| g.neighbors_mask(v)).collect();
    let remaining = g.edge_count();
    let root_bound = packing_bound(&avail, remaining);
    let mut s = Packer {
        avail,
        remaining,
        current: Vec::new(),
        best: Vec::new(),
        root_bound,
        nodes: 0,
        budget,
    };
    s.dfs()?;
    Ok(PackingResult { nu: s.best.len(), witness: s.best, nodes: s.nodes })
}

/// Upper bound on the triangles that fit in the undecided graph.
pub(crate) fn packing_bound(avail: &[u64], remaining: usize) -> usize {
    let odd = avail.iter().filter(|r| r.count_ones() % 2 == 1).count();
    let mut leftover = odd / 2;
    while leftover % 3 != remaining % 3 || (odd == 0 && (leftover == 1 || leftover == 2)) {
        leftover += 1;
    }
    remaining.saturating_sub(leftover) / 3
}

struct Packer {
    avail: Vec<u64>,
    remaining: usize,
    current: Vec<Triangle>,
    best: Vec<Triangle>,
    root_bound: usize,
    nodes: u64,
    budget: u64,
}

impl Packer {
    #[inline]
    fn toggle(&mut self, u: usize, v: usize) {
        self.avail[u] ^= 1 << v;
        self.avail[v] ^= 1 << u;
    }

    fn dfs(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        if self.best.len() == self.root_bound {
            return Ok(());
        }
        if self.current.len() + packing_bound(&self.avail, self.remaining) <= self.best.len() {
            return Ok(());
        }
        let Some(u) = self.avail.iter().position(|&r| r != 0) else {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        };
        // Every undecided neighbour of the first non-isolated vertex lies above it.
        let v = self.avail[u].trailing_zeros() as usize;

        self.toggle(u, v);
        for w in BitIter(self.avail[u] & self.avail[v]) {
            self.toggle(u, w);
            self.toggle(v, w);
            self.remaining -= 3;
            self.current.push(Triangle::new(u, v, w));
            let r = self.dfs();
            self.current.pop();
            self.remaining += 3;
            self.toggle(u, w);
            self.toggle(v, w);
            if r.is_err() {
                self.toggle(u, v);
                return r;
            }
        }
        self.remaining -= 1;
        let r = self.dfs();
        self.remaining += 1;
        self.toggle(u, v);
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedKind};

    fn k(n: usize) -> Graph {
        make_named(NamedKind::Complete, n, None).unwrap()
    }

    /// Largest edge-disjoint subfamily of all triangles, by subset enumeration.
    fn brute_nu(g: &Graph) -> usize {
        let tris = g.triangles();
        assert!(tris.len() <= 20);
        let mut best = 0;
        for mask in 0u32..(1 << tris.len()) {
            let chosen: Vec<_> = tris.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| t).collect();
            if chosen.len() <= best {
                continue;
            }
            let mut pairs: Vec<_> = chosen.iter().flat_map(|t| t.pairs()).collect();
            let total = pairs.len();
            pairs.sort();
            pairs.dedup();
            if pairs.len() == total {
                best = chosen.len();
            }
        }
        best
    }

    fn check_witness(g: &Graph, r: &PackingResult) {
        assert_eq!(r.witness.len(), r.nu);
        let mut seen = std::collections::HashSet::new();
        for t in &r.witness {
            for (a, b) in t.pairs() {
                assert!(g.has_edge(a, b));
                assert!(seen.insert((a, b)), "overlap at {a}-{b}");
            }
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(max_triangle_packing(&k(3)).unwrap().nu, 1);
        let k34 = make_named(NamedKind::Turan2, 7, None).unwrap();
        assert_eq!(max_triangle_packing(&k34).unwrap().nu, 0);
        for (n, nu) in [(4, 1), (5, 2), (6, 4)] {
            let r = max_triangle_packing(&k(n)).unwrap();
            assert_eq!(r.nu, nu);
            assert_eq!(brute_nu(&k(n)), nu);
            check_witness(&k(n), &r);
        }
        let r = max_triangle_packing(&k(7)).unwrap();
        assert_eq!(r.nu, 7);
        check_witness(&k(7), &r);
    }

    #[test]
    fn matches_subset_oracle_on_dense_six_vertex_graphs() {
        for g in crate::graph::enumerate_unlabeled(6).unwrap() {
            if g.triangles().len() <= 14 {
                let r = max_triangle_packing(&g).unwrap();
                assert_eq!(r.nu, brute_nu(&g), "{g:?}");
                check_witness(&g, &r);
            }
        }
    }

    #[test]
    fn bound_is_parity_aware() {
        let g = k(11);
        let avail: Vec<u64> = (0..11).map(|v| g.neighbors_mask(v)).collect();
        assert_eq!(packing_bound(&avail, 55), 17);
        let g = k(14);
        let avail: Vec<u64> = (0..14).map(|v| g.neighbors_mask(v)).collect();
        assert_eq!(packing_bound(&avail, 91), 28);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        assert_eq!(
            max_triangle_packing_with_budget(&k(9), 3),
            Err(Error::BudgetExhausted { budget: 3 })
        );
    }

    #[test]
    fn complete_graphs_to_fourteen() {
        // nu(K_n) from the leftover sizes: 0, perfect matching, claw plus matching, C4.
        for n in 3..=14usize {
            let e = n * (n - 1) / 2;
            let leftover = match n % 6 {
                1 | 3 => 0,
                0 | 2 => n / 2,
                4 => 3 + (n - 4) / 2,
                _ => 4,
            };
            let r = max_triangle_packing(&k(n)).unwrap();
            assert_eq!(r.nu, (e - leftover) / 3, "n = {n}");
            check_witness(&k(n), &r);
        }
    }
}
