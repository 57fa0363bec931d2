//! Canonical forms by exhaustive relabelling.
//!
//! The code of a labelling is the graph6 bit sequence of its upper triangle
//! (column order, first pair most significant). The canonical form is the
//! smallest code over all labellings that list vertices in ascending order
//! of an isomorphism-invariant vertex signature; vertices with equal
//! signatures are permuted exhaustively. Codes are built column by column,
//! so a partial labelling is abandoned as soon as its prefix exceeds the
//! best prefix found so far.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{to_graph6, Graph};
use crate::error::{Error, Result};

/// 10 vertices give 45 code bits, which fits one word.
pub const MAX_CANON_ORDER: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    /// Upper-triangle bits, `n(n-1)/2` of them, first pair in the most significant position.
    pub code: u64,
}

impl CanonicalForm {
    /// The canonical representative: the labelling whose code is `self.code`.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let nbits = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n).expect("canonical order is small");
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (nbits - 1 - k) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    pub fn edge_count(&self) -> usize {
        self.code.count_ones() as usize
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(&self.to_graph()))
    }
}

/// Code of `g` under the identity labelling.
pub(crate) fn code_of(g: &Graph) -> u64 {
    let mut code = 0u64;
    for j in 1..g.order() {
        for i in 0..j {
            code = (code << 1) | g.has_edge(i, j) as u64;
        }
    }
    code
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(cf, _)| cf)
}

/// Returns the canonical form together with a labelling `perm` such that
/// `g.relabel(&perm)` is the canonical representative.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANON_ORDER {
        return Err(Error::OrderOutOfRange { n, min: 0, max: MAX_CANON_ORDER });
    }
    if n <= 1 {
        return Ok((CanonicalForm { n, code: 0 }, (0..n).collect()));
    }

    let signature = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    let sigs: Vec<_> = (0..n).map(signature).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]));
    // class[k]: signature class that must occupy position k
    let mut class = vec![0usize; n];
    for k in 1..n {
        class[k] = class[k - 1] + (sigs[order[k]] != sigs[order[k - 1]]) as usize;
    }
    let vclass: Vec<usize> = {
        let mut vc = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            vc[v] = class[k];
        }
        vc
    };

    let mut search = Search {
        g,
        n,
        class: &class,
        vclass: &vclass,
        perm: Vec::with_capacity(n),
        used: 0,
        best_cols: vec![u64::MAX; n],
        best_perm: Vec::new(),
    };
    search.run();

    let perm = search.best_perm;
    let code = code_of(&g.relabel(&perm));
    Ok((CanonicalForm { n, code }, perm))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    class: &'a [usize],
    vclass: &'a [usize],
    perm: Vec<usize>,
    used: u64,
    /// Column `k` of the best code so far, as a `k`-bit word (first row most significant).
    best_cols: Vec<u64>,
    best_perm: Vec<usize>,
}

impl Search<'_> {
    /// Invariant: the columns placed so far equal `best_cols[..k]`; deeper
    /// entries are `u64::MAX` while the incumbent is being replaced.
    fn run(&mut self) {
        let k = self.perm.len();
        if k == self.n {
            if self.best_perm.is_empty() {
                self.best_perm = self.perm.clone();
            }
            return;
        }
        for v in 0..self.n {
            if self.used >> v & 1 == 1 || self.vclass[v] != self.class[k] {
                continue;
            }
            let mut col = 0u64;
            for &u in &self.perm {
                col = (col << 1) | self.g.has_edge(u, v) as u64;
            }
            match col.cmp(&self.best_cols[k]) {
                std::cmp::Ordering::Greater => continue,
                std::cmp::Ordering::Equal => {}
                std::cmp::Ordering::Less => {
                    self.best_cols[k] = col;
                    for c in &mut self.best_cols[k + 1..] {
                        *c = u64::MAX;
                    }
                    self.best_perm.clear();
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run();
            self.perm.pop();
            self.used &= !(1 << v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named, NamedKind};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn path3(labels: [usize; 3]) -> Graph {
        Graph::from_edges(3, &[(labels[0], labels[1]), (labels[1], labels[2])]).unwrap()
    }

    /// Minimum code over every permutation, no pruning.
    fn brute_min(g: &Graph) -> u64 {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = u64::MAX;
        permute(&mut perm, 0, &mut |p| best = best.min(code_of(&g.relabel(p))));
        best
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn path_labelings_agree() {
        let a = canonical_form(&path3([0, 1, 2])).unwrap();
        let b = canonical_form(&path3([1, 0, 2])).unwrap();
        let c = canonical_form(&path3([0, 2, 1])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        let k3 = make_named(NamedKind::Complete, 3, None).unwrap();
        assert_ne!(a, canonical_form(&k3).unwrap());
    }

    #[test]
    fn representative_has_the_code() {
        let g = Graph::from_edges(6, &[(0, 5), (5, 2), (2, 3), (3, 1), (1, 4)]).unwrap();
        let (cf, perm) = canonical_labeling(&g).unwrap();
        assert_eq!(code_of(&g.relabel(&perm)), cf.code);
        assert_eq!(cf.to_graph(), g.relabel(&perm));
        assert_eq!(cf.edge_count(), 5);
    }

    #[test]
    fn random_relabelings() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=7 {
            for _ in 0..30 {
                let mut g = Graph::empty(n).unwrap();
                for j in 1..n {
                    for i in 0..j {
                        if rand::Rng::gen_bool(&mut rng, 0.5) {
                            g.add_edge(i, j);
                        }
                    }
                }
                let cf = canonical_form(&g).unwrap();
                let mut p: Vec<usize> = (0..n).collect();
                for _ in 0..100 {
                    p.shuffle(&mut rng);
                    assert_eq!(canonical_form(&g.relabel(&p)).unwrap(), cf);
                }
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic_pairs() {
        // Same degree sequence, different graphs: C6 versus two triangles.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&tt).unwrap());
    }

    #[test]
    fn pruned_search_agrees_on_isomorphism_classes_with_brute_force() {
        // Two graphs are isomorphic iff brute minima agree; check that the
        // pruned form induces the same partition on all labelled 4-vertex graphs.
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut seen = std::collections::HashMap::new();
        for mask in 0u32..64 {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(4, &edges).unwrap();
            let cf = canonical_form(&g).unwrap();
            let prev = seen.insert(brute_min(&g), cf);
            if let Some(prev) = prev {
                assert_eq!(prev, cf);
            }
        }
        assert_eq!(seen.len(), 11);
    }

    #[test]
    fn order_limit() {
        assert!(canonical_form(&Graph::empty(11).unwrap()).is_err());
        let c10 = Graph::from_edges(10, &(0..10).map(|i| (i, (i + 1) % 10)).collect::<Vec<_>>()).unwrap();
        let p: Vec<usize> = vec![3, 7, 1, 0, 9, 2, 8, 5, 6, 4];
        assert_eq!(canonical_form(&c10).unwrap(), canonical_form(&c10.relabel(&p)).unwrap());
    }
}
