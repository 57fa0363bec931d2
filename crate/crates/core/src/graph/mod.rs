//! Simple undirected graphs on at most 64 labelled vertices.

mod canon;
mod edgelist;
mod enumerate;
mod graph6;
mod named;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm, MAX_CANON_ORDER};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use enumerate::{enumerate_unlabeled, MAX_ENUM_ORDER};
pub use graph6::{parse_graph6, to_graph6};
pub use named::{make_named, NamedKind};

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// Adjacency is one `u64` row per vertex; bit `j` of row `i` is set iff
/// `ij` is an edge. Rows are kept symmetric with empty diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Three distinct vertices stored in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    /// Sorts the vertices. Panics if two coincide.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(v[0] != v[1] && v[1] != v[2], "triangle needs distinct vertices");
        Triangle(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn pairs(&self) -> [(usize, usize); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    pub fn contains_pair(&self, u: usize, v: usize) -> bool {
        self.0.contains(&u) && self.0.contains(&v) && u != v
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, min: 0, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { v: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Panics on out-of-range vertices or loops; use [`Graph::try_add_edge`]
    /// for untrusted input.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let above = if u + 1 >= 64 { 0 } else { self.adj[u] & (!0u64 << (u + 1)) };
            out.extend(BitIter(above).map(|v| (u, v)));
        }
        out
    }

    /// The graph whose vertex `i` is vertex `perm[i]` of `self`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = Graph { n: self.n, adj: vec![0; self.n] };
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        g
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut g = Graph { n: k, adj: vec![0; k] };
        for i in 0..k {
            for j in (i + 1)..k {
                if self.has_edge(vertices[i], vertices[j]) {
                    g.adj[i] |= bit(j);
                    g.adj[j] |= bit(i);
                }
            }
        }
        g
    }

    /// Copy with one extra vertex adjacent to the vertices in `mask`.
    pub fn extend_vertex(&self, mask: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange { n, min: 0, max: MAX_ORDER });
        }
        let mut g = Graph { n, adj: self.adj.clone() };
        g.adj.push(0);
        for v in BitIter(mask) {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
            g.adj[v] |= bit(n - 1);
            g.adj[n - 1] |= bit(v);
        }
        Ok(g)
    }

    /// Every vertex triple spanning three edges, ascending.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for (u, v) in self.edges() {
            let above_v = if v + 1 >= 64 { 0 } else { !0u64 << (v + 1) };
            for w in BitIter(self.adj[u] & self.adj[v] & above_v) {
                out.push(Triangle([u, v, w]));
            }
        }
        out
    }

    pub fn is_triangle_divisible(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) % 2 == 0) && self.edge_count() % 3 == 0
    }

    pub fn complement(&self) -> Graph {
        let full = if self.n == 64 { !0u64 } else { (1u64 << self.n) - 1 };
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", to_graph6(self), self.edges())
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        make_named(NamedKind::Complete, n, None).unwrap()
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(complete(4).triangles().len(), 4);
        assert_eq!(complete(7).triangles().len(), 35);
        let k34 = make_named(NamedKind::Turan2, 7, None).unwrap();
        assert!(k34.triangles().is_empty());
    }

    #[test]
    fn triangle_list_matches_triple_scan() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (1, 3)]).unwrap();
        let mut brute = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                        brute.push(Triangle([a, b, c]));
                    }
                }
            }
        }
        assert_eq!(g.triangles(), brute);
    }

    #[test]
    fn divisibility() {
        assert!(complete(7).is_triangle_divisible());
        assert!(!complete(6).is_triangle_divisible());
        assert!(complete(9).is_triangle_divisible());
        assert!(Graph::empty(0).unwrap().is_triangle_divisible());
    }

    #[test]
    fn rejects_loops_and_range() {
        let mut g = Graph::empty(3).unwrap();
        assert!(g.try_add_edge(1, 1).is_err());
        assert!(g.try_add_edge(0, 3).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn order_64_edges() {
        let g = complete(64);
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.edges().len(), 2016);
        assert_eq!(g.complement().edge_count(), 0);
    }
}
