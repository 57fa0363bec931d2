//! Flag densities and the per-graph certificate coefficients.
//!
//! For a 7-vertex graph `H`, pick a root `w` and split the other six
//! vertices into an ordered pair of 3-sets `(A, B)`; there are
//! `7 * C(6, 3) = 140` such choices. Each choice contributes
//! `M[f(A), f(B)]`, where `f(S)` is the flag of `H[S + w]` rooted at `w`
//! and non-listed flags contribute nothing. `q(H)` is the average
//! contribution; the certificate coefficient adds the total,
//! `c_H = pi3f(H) + 140 q(H)`.

use num_bigint::BigInt;

use super::flags::{classify_mask, rooted_mask};
use super::matrix::{M_NUMERATORS, M_SCALE};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::pi3f;
use crate::rational::{int, Rational};

/// Number of (root, ordered 3+3 split) choices on seven vertices.
pub const ROOTED_SPLITS: i64 = 7 * 20;

/// Densities of F1..F7 in `g` rooted at `w`: the fraction of 3-sets `S`
/// of the other vertices for which `g[S + w]` rooted at `w` is each flag.
pub fn flag_vector(g: &Graph, w: usize) -> Result<Vec<Rational>> {
    let n = g.order();
    if n < 4 {
        return Err(Error::OrderOutOfRange { n, min: 4, max: crate::graph::MAX_ORDER });
    }
    if w >= n {
        return Err(Error::VertexOutOfRange { v: w, n });
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != w).collect();
    let mut counts = [0i64; 7];
    let mut total = 0i64;
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            for k in j + 1..others.len() {
                total += 1;
                let mask = rooted_mask(g, [w, others[i], others[j], others[k]]);
                if let Some(idx) = classify_mask(mask).index() {
                    counts[idx] += 1;
                }
            }
        }
    }
    Ok(counts.iter().map(|&c| Rational::new(c.into(), total.into())).collect())
}

/// Sum of `M` numerators over all 140 rooted splits of `h`.
fn split_sum(h: &Graph) -> i128 {
    let mut sum = 0i128;
    for w in 0..7 {
        let others: Vec<usize> = (0..7).filter(|&v| v != w).collect();
        // Ordered splits: every 3-subset A of the six, paired with its complement.
        for a in 0u32..64 {
            if a.count_ones() != 3 {
                continue;
            }
            let (mut sa, mut sb) = ([w; 4], [w; 4]);
            let (mut ia, mut ib) = (1, 1);
            for (bit, &v) in others.iter().enumerate() {
                if a >> bit & 1 == 1 {
                    sa[ia] = v;
                    ia += 1;
                } else {
                    sb[ib] = v;
                    ib += 1;
                }
            }
            let fa = classify_mask(rooted_mask(h, sa)).index();
            let fb = classify_mask(rooted_mask(h, sb)).index();
            if let (Some(i), Some(j)) = (fa, fb) {
                sum += M_NUMERATORS[i][j] as i128;
            }
        }
    }
    sum
}

fn check_order7(h: &Graph) -> Result<()> {
    if h.order() != 7 {
        return Err(Error::OrderOutOfRange { n: h.order(), min: 7, max: 7 });
    }
    Ok(())
}

/// Average of `M[f(A), f(B)]` over the 140 rooted splits of `h`.
pub fn q_coefficient(h: &Graph) -> Result<Rational> {
    check_order7(h)?;
    let den = BigInt::from(ROOTED_SPLITS) * BigInt::from(M_SCALE);
    Ok(Rational::new(BigInt::from(split_sum(h)), den))
}

/// `c_H = pi3f(H) + 140 q(H)`, together with `pi3f(H)` and `q(H)`.
pub fn coefficient_c(h: &Graph) -> Result<(Rational, Rational, Rational)> {
    let q = q_coefficient(h)?;
    let (f, _) = pi3f(h)?;
    let c = &f + int(ROOTED_SPLITS) * &q;
    Ok((c, f, q))
}

/// Average of `c_H` over the 7-vertex induced subgraphs of the balanced
/// complete bipartite graph on `n` vertices. Such subgraphs are
/// `K_{a, 7-a}`, with `a` hypergeometric.
pub fn turan_average_coefficient(n: usize) -> Result<Rational> {
    if n < 7 {
        return Err(Error::OrderOutOfRange { n, min: 7, max: usize::MAX });
    }
    let (p1, p2) = (n / 2, n - n / 2);
    let binom = |a: usize, b: usize| -> BigInt {
        if b > a {
            return BigInt::from(0);
        }
        (0..b).fold(BigInt::from(1), |acc, i| acc * BigInt::from(a - i) / BigInt::from(i + 1))
    };
    let total = binom(n, 7);
    let mut avg = Rational::from_integer(0.into());
    for a in 0..=7 {
        let weight = binom(p1, a) * binom(p2, 7 - a);
        if weight == BigInt::from(0) {
            continue;
        }
        let h = Graph::from_edges(7, &(0..a).flat_map(|u| (a..7).map(move |v| (u, v))).collect::<Vec<_>>())?;
        let (c, _, _) = coefficient_c(&h)?;
        avg += c * Rational::new(weight, total.clone());
    }
    Ok(avg)
}
