//! Optimal decompositions of `K_n` by residue of `n` mod 6, of `K_n`
//! minus a matching, and the cheaper cover of `K_n` for `n = 4 (mod 6)`.
//!
//! Residues 1 and 3 use a triple system directly; residues 0 and 2 delete a
//! point from a triple system on `n + 1` points. Residues 4 and 5 remove a
//! small leftover and complete the now triangle-divisible rest by exact
//! search, so every returned object is validated before it leaves here.

use super::sts::steiner_triple_system;
use crate::decomp::{
    triangle_decompose_exact_with_budget, validate_cover, validate_decomposition, Cover, Decomposition,
    DEFAULT_NODE_BUDGET,
};
use crate::error::{Error, Result};
use crate::graph::{make_named, Graph, NamedKind, Triangle};
use crate::rational::int;

pub fn decompose_complete(n: usize) -> Result<Decomposition> {
    decompose_complete_with_budget(n, DEFAULT_NODE_BUDGET)
}

pub fn decompose_complete_with_budget(n: usize, budget: u64) -> Result<Decomposition> {
    if n < 3 {
        return Err(Error::OrderOutOfRange { n, min: 3, max: crate::graph::MAX_ORDER });
    }
    let host = make_named(NamedKind::Complete, n, None)?;
    let (triangle_parts, edge_parts) = match n % 6 {
        1 | 3 => (steiner_triple_system(n)?.triples, vec![]),
        0 | 2 => {
            let bigger = steiner_triple_system(n + 1)?;
            bigger.delete_point(n)
        }
        4 => {
            let mut leftover = vec![(0, 1), (0, 2), (0, 3)];
            leftover.extend((4..n).step_by(2).map(|i| (i, i + 1)));
            complete_rest(&host, leftover, budget)?
        }
        _ => complete_rest(&host, vec![(0, 1), (1, 2), (2, 3), (0, 3)], budget)?,
    };
    let d = Decomposition { host, edge_parts, triangle_parts };
    validate_decomposition(&d.host, &d, &int(3))?;
    Ok(d)
}

type Split = (Vec<Triangle>, Vec<(usize, usize)>);

/// Removes `leftover` from `host` and decomposes the rest into triangles.
fn complete_rest(
    host: &Graph,
    leftover: Vec<(usize, usize)>,
    budget: u64,
) -> Result<Split> {
    let mut rest = host.clone();
    for &(u, v) in &leftover {
        rest.remove_edge(u, v);
    }
    match triangle_decompose_exact_with_budget(&rest, budget)? {
        Some(tris) => Ok((tris, leftover)),
        None => Err(Error::Construction(format!(
            "the remainder after removing {leftover:?} has no triangle decomposition"
        ))),
    }
}

/// Decomposition of `K_n` minus the matching `(0,1), (2,3), ...` of size
/// `m` with cost `C(n, 2) + 2`, for `n = 1, 3 (mod 6)` and `m = 2 (mod 3)`.
///
/// The `2m` matched vertices have odd degree, so at least `m` edge parts
/// are needed; the edge count forces `m + 2`. The leftover pairs up the odd
/// vertices as `(1,2), (3,4), ..., (2m-3, 2m-2)` and joins the last two,
/// `2m - 1` and `0`, by the path `2m-1, n-1, 2, 0`.
pub fn decompose_matching_removed(n: usize, m: usize) -> Result<Decomposition> {
    if n % 6 != 1 && n % 6 != 3 {
        return Err(Error::Residue { n, reason: "need n = 1 or 3 (mod 6)".into() });
    }
    if m % 3 != 2 {
        return Err(Error::InvalidArgument(format!("matching size {m} is not 2 (mod 3)")));
    }
    if 2 * m > n {
        return Err(Error::InvalidArgument(format!("matching of size {m} does not fit in {n} vertices")));
    }
    let host = make_named(NamedKind::CompleteMinusMatching, n, Some(m))?;
    let mut leftover: Vec<(usize, usize)> = (1..m).map(|i| (2 * i - 1, 2 * i)).collect();
    leftover.extend([(2 * m - 1, n - 1), (2, n - 1), (0, 2)]);
    let (triangle_parts, edge_parts) = complete_rest(&host, leftover, DEFAULT_NODE_BUDGET)?;
    let d = Decomposition { host, edge_parts, triangle_parts };
    validate_decomposition(&d.host, &d, &int(3))?;
    Ok(d)
}

/// Cover of `K_n`, `n = 4 (mod 6)`, of cost `n^2 / 2`: the claw edges
/// `01` and `02` of the optimal decomposition are traded for the triangle
/// `012`, covering the pair `12` twice.
pub fn covering_complete(n: usize) -> Result<Cover> {
    if n % 6 != 4 {
        return Err(Error::Residue { n, reason: "the cover construction needs n = 4 (mod 6)".into() });
    }
    let d = decompose_complete(n)?;
    let edge_parts: Vec<(usize, usize)> = d.edge_parts.into_iter().filter(|&e| e != (0, 1) && e != (0, 2)).collect();
    let mut triangle_parts = d.triangle_parts;
    triangle_parts.push(Triangle::new(0, 1, 2));
    let c = Cover { host: d.host, edge_parts, triangle_parts };
    validate_cover(&c.host, &c, &int(3))?;
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::max_triangle_packing;

    fn leftover_degrees(d: &Decomposition) -> Vec<usize> {
        let l = d.leftover();
        let mut degs: Vec<usize> = (0..l.order()).map(|v| l.degree(v)).collect();
        degs.sort_unstable();
        degs
    }

    #[test]
    fn table_rows() {
        let d = decompose_complete(7).unwrap();
        assert_eq!((d.triangle_parts.len(), d.edge_parts.len()), (7, 0));
        assert_eq!(d.cost(&int(3)), int(21));

        let d = decompose_complete(6).unwrap();
        assert_eq!((d.triangle_parts.len(), d.edge_parts.len()), (4, 3));
        assert_eq!(d.cost(&int(3)), int(18));
        assert_eq!(leftover_degrees(&d), vec![1; 6]);

        let d = decompose_complete(10).unwrap();
        assert_eq!((d.triangle_parts.len(), d.edge_parts.len()), (13, 6));
        assert_eq!(d.cost(&int(3)), int(51));
        assert_eq!(leftover_degrees(&d), vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 3]);

        let d = decompose_complete(11).unwrap();
        assert_eq!((d.triangle_parts.len(), d.edge_parts.len()), (17, 4));
        assert_eq!(d.cost(&int(3)), int(59));
        assert_eq!(leftover_degrees(&d), vec![0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2]);
    }

    #[test]
    fn all_orders_to_twenty_match_the_closed_form() {
        for n in 3..=20u64 {
            let d = decompose_complete(n as usize).unwrap();
            let choose = n * (n - 1) / 2;
            let expect = match n % 6 {
                1 | 3 => choose,
                0 | 2 => n * n / 2,
                4 => n * n / 2 + 1,
                _ => choose + 4,
            };
            assert_eq!(d.cost(&int(3)), int(expect as i64), "n = {n}");
            if n % 6 != 1 && n % 6 != 3 {
                assert_eq!(expect, choose + crate::constructions::wfun(n), "n = {n}");
            }
        }
    }

    #[test]
    fn matching_removed() {
        let d = decompose_matching_removed(13, 2).unwrap();
        assert_eq!(d.cost(&int(3)), int(80));
        assert_eq!(d.edge_parts.len(), 4);
        let d = decompose_matching_removed(13, 5).unwrap();
        assert_eq!(d.cost(&int(3)), int(80));
        let nu = max_triangle_packing(&d.host).unwrap().nu;
        assert_eq!(int(2 * 73 - 3 * nu as i64), int(80));
        let d = decompose_matching_removed(7, 2).unwrap();
        assert_eq!(d.cost(&int(3)), int(23));
        let nu = max_triangle_packing(&d.host).unwrap().nu;
        assert_eq!(2 * 19 - 3 * nu, 23);
        assert!(decompose_matching_removed(12, 2).is_err());
        assert!(decompose_matching_removed(13, 3).is_err());
        assert!(decompose_matching_removed(7, 5).is_err());
    }

    #[test]
    fn covers() {
        let c = covering_complete(10).unwrap();
        let check = validate_cover(&c.host, &c, &int(3)).unwrap();
        assert_eq!(check.cost, int(50));
        assert_eq!(check.multiply_covered, vec![(1, 2)]);
        assert_eq!(covering_complete(16).unwrap().cost(&int(3)), int(128));
        assert!(matches!(covering_complete(9), Err(Error::Residue { .. })));
    }
}
