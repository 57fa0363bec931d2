//! Perfect triangle decompositions by exact backtracking.

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph, Triangle};

use super::DEFAULT_NODE_BUDGET;

/// Partitions `E(g)` into triangles, or returns `None` when no partition
/// exists. Graphs that are not triangle-divisible are rejected before any
/// search.
pub fn triangle_decompose_exact(g: &Graph) -> Result<Option<Vec<Triangle>>> {
    triangle_decompose_exact_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn triangle_decompose_exact_with_budget(g: &Graph, budget: u64) -> Result<Option<Vec<Triangle>>> {
    if !g.is_triangle_divisible() {
        let odd: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) % 2 == 1).collect();
        return Err(Error::InvalidArgument(format!(
            "graph is not triangle-divisible ({} edges, odd-degree vertices {:?})",
            g.edge_count(),
            odd
        )));
    }
    let mut s = Backtrack {
        avail: (0..g.order()).map(|v| g.neighbors_mask(v)).collect(),
        chosen: Vec::with_capacity(g.edge_count() / 3),
        nodes: 0,
        budget,
    };
    Ok(s.run()?.then_some(s.chosen))
}

struct Backtrack {
    avail: Vec<u64>,
    chosen: Vec<Triangle>,
    nodes: u64,
    budget: u64,
}

impl Backtrack {
    fn remove(&mut self, t: [usize; 3]) {
        let [a, b, c] = t;
        self.avail[a] &= !(1 << b | 1 << c);
        self.avail[b] &= !(1 << a | 1 << c);
        self.avail[c] &= !(1 << a | 1 << b);
    }

    fn restore(&mut self, t: [usize; 3]) {
        let [a, b, c] = t;
        self.avail[a] |= 1 << b | 1 << c;
        self.avail[b] |= 1 << a | 1 << c;
        self.avail[c] |= 1 << a | 1 << b;
    }

    /// Lowest uncovered edge `uv` and the bitmask of its completions.
    fn next_edge(&self) -> Option<(usize, usize, u64)> {
        let u = self.avail.iter().position(|&r| r != 0)?;
        let v = self.avail[u].trailing_zeros() as usize;
        Some((u, v, self.avail[u] & self.avail[v]))
    }

    fn run(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget });
        }
        let Some((u, v, completions)) = self.next_edge() else {
            return Ok(true);
        };
        for w in BitIter(completions) {
            let t = [u, v, w];
            self.remove(t);
            self.chosen.push(Triangle::new(u, v, w));
            if self.run()? {
                return Ok(true);
            }
            self.chosen.pop();
            self.restore(t);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{validate_decomposition, Decomposition};
    use crate::graph::{make_named, NamedKind};
    use crate::rational::int;

    fn k(n: usize) -> Graph {
        make_named(NamedKind::Complete, n, None).unwrap()
    }

    fn assert_partition(g: &Graph, tris: Vec<Triangle>) {
        let d = Decomposition { host: g.clone(), edge_parts: vec![], triangle_parts: tris };
        validate_decomposition(g, &d, &int(3)).unwrap();
    }

    #[test]
    fn k7_is_fano() {
        let t = triangle_decompose_exact(&k(7)).unwrap().unwrap();
        assert_eq!(t.len(), 7);
        assert_partition(&k(7), t);
    }

    #[test]
    fn k6_rejected_up_front() {
        assert!(matches!(triangle_decompose_exact(&k(6)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn k6_minus_perfect_matching() {
        let g = make_named(NamedKind::CompleteMinusMatching, 6, Some(3)).unwrap();
        let t = triangle_decompose_exact(&g).unwrap().unwrap();
        assert_eq!(t.len(), 4);
        assert_partition(&g, t);
    }

    #[test]
    fn divisible_but_not_decomposable() {
        // Two triangles joined by a 6-cycle through fresh vertices is divisible;
        // C_9 is divisible (even degrees, 9 edges) yet triangle-free.
        let c9 = Graph::from_edges(9, &(0..9).map(|i| (i, (i + 1) % 9)).collect::<Vec<_>>()).unwrap();
        assert_eq!(triangle_decompose_exact(&c9).unwrap(), None);
    }

    #[test]
    fn complete_graphs_with_admissible_orders() {
        for n in [3usize, 7, 9, 13, 15] {
            let t = triangle_decompose_exact(&k(n)).unwrap().unwrap();
            assert_eq!(t.len(), n * (n - 1) / 6);
            assert_partition(&k(n), t);
        }
    }
}
