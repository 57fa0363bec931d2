use std::collections::BTreeMap;

use super::{canonical_labeling, Graph};
use crate::error::{Error, Result};

pub const MAX_ENUM_ORDER: usize = 7;

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by edge count and then canonical code. Each representative is
/// the canonical labelling itself, so `to_graph6` output is stable.
///
/// Built by adding a vertex to every `(n-1)`-vertex representative in all
/// `2^(n-1)` ways and deduplicating on canonical form.
pub fn enumerate_unlabeled(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ENUM_ORDER });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut classes = BTreeMap::new();
        for g in &level {
            for mask in 0..(1u64 << (k - 1)) {
                let h = g.extend_vertex(mask)?;
                let (cf, perm) = canonical_labeling(&h)?;
                classes
                    .entry((cf.edge_count(), cf.code))
                    .or_insert_with(|| h.relabel(&perm));
            }
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_unlabeled(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn labelled_dedup_oracle() {
        // Every labelled graph on n <= 5 vertices, deduplicated by checking
        // all n! relabellings against the classes found so far.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let mut perms = vec![];
            let mut p: Vec<usize> = (0..n).collect();
            heap_perms(&mut p, n, &mut perms);
            let mut reps: Vec<HashSet<Vec<(usize, usize)>>> = vec![];
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                if reps.iter().any(|orbit| orbit.contains(&g.edges())) {
                    continue;
                }
                reps.push(perms.iter().map(|p| g.relabel(p).edges()).collect());
            }
            assert_eq!(reps.len(), enumerate_unlabeled(n).unwrap().len(), "n = {n}");
        }
    }

    fn heap_perms(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap_perms(p, k - 1, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }

    #[test]
    fn deterministic_order_and_canonical_reps() {
        let list = enumerate_unlabeled(5).unwrap();
        let keys: Vec<_> = list
            .iter()
            .map(|g| {
                let cf = canonical_form(g).unwrap();
                assert_eq!(cf.to_graph(), *g);
                (g.edge_count(), cf.code)
            })
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(list[0].edge_count(), 0);
        assert_eq!(list.last().unwrap().edge_count(), 10);
    }

    #[test]
    fn range_checked() {
        assert!(enumerate_unlabeled(0).is_err());
        assert!(enumerate_unlabeled(8).is_err());
    }
}
