//! Decompositions and covers of a host graph by single edges and
//! triangles, their validation and costs, and the exact searches behind
//! the integral decomposition cost.
//!
//! With edges costing 2 and triangles costing `alpha`, a cheapest
//! decomposition for `alpha < 6` uses a maximum set of edge-disjoint
//! triangles plus every leftover edge, so its cost is
//! `2 e(G) - (6 - alpha) nu(G)`.

mod exact;
mod extremal;
mod packing;

pub use exact::{triangle_decompose_exact, triangle_decompose_exact_with_budget};
pub use extremal::{brute_force_extremal, ExtremalReport};
pub use packing::{max_triangle_packing, max_triangle_packing_with_budget, PackingResult, DEFAULT_NODE_BUDGET};

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::rational::{int, Rational};

/// One part of a decomposition or cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Part {
    Edge(usize, usize),
    Triangle(Triangle),
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Edge(u, v) => write!(f, "e {u} {v}"),
            Part::Triangle(t) => write!(f, "t {t}"),
        }
    }
}

/// Parses the part-per-line text format (`e u v` / `t u v w`).
pub fn parse_parts(text: &str) -> Result<Vec<Part>> {
    let mut parts = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::InvalidArgument(format!("line {}: {msg}: {line:?}", i + 1));
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap_or("");
        let nums: Vec<usize> = toks
            .map(|t| t.parse().map_err(|_| bad("bad vertex")))
            .collect::<Result<_>>()?;
        match (tag, nums.as_slice()) {
            ("e", &[u, v]) if u != v => parts.push(Part::Edge(u.min(v), u.max(v))),
            ("t", &[a, b, c]) if a != b && b != c && a != c => parts.push(Part::Triangle(Triangle::new(a, b, c))),
            _ => return Err(bad("expected `e u v` or `t u v w` with distinct vertices")),
        }
    }
    Ok(parts)
}

fn render_parts(edges: &[(usize, usize)], triangles: &[Triangle]) -> String {
    let mut s = String::new();
    for t in triangles {
        s.push_str(&format!("{}\n", Part::Triangle(*t)));
    }
    for &(u, v) in edges {
        s.push_str(&format!("{}\n", Part::Edge(u, v)));
    }
    s
}

fn split_parts(parts: &[Part]) -> (Vec<(usize, usize)>, Vec<Triangle>) {
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for p in parts {
        match *p {
            Part::Edge(u, v) => edges.push((u.min(v), u.max(v))),
            Part::Triangle(t) => triangles.push(t),
        }
    }
    (edges, triangles)
}

fn parts_cost(edges: usize, triangles: usize, alpha: &Rational) -> Rational {
    int(2 * edges as i64) + alpha * int(triangles as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub host: Graph,
    pub edge_parts: Vec<(usize, usize)>,
    pub triangle_parts: Vec<Triangle>,
}

impl Decomposition {
    pub fn from_parts(host: Graph, parts: &[Part]) -> Self {
        let (edge_parts, triangle_parts) = split_parts(parts);
        Decomposition { host, edge_parts, triangle_parts }
    }

    /// `2 |edge parts| + alpha |triangle parts|`, without validating.
    pub fn cost(&self, alpha: &Rational) -> Rational {
        parts_cost(self.edge_parts.len(), self.triangle_parts.len(), alpha)
    }

    pub fn validate(&self, alpha: &Rational) -> Result<Rational> {
        validate_decomposition(&self.host, self, alpha)
    }

    /// Triangles first, then edges; one part per line.
    pub fn to_text(&self) -> String {
        render_parts(&self.edge_parts, &self.triangle_parts)
    }

    /// The graph formed by the edge parts.
    pub fn leftover(&self) -> Graph {
        let mut g = Graph::empty(self.host.order()).expect("host order is valid");
        for &(u, v) in &self.edge_parts {
            g.add_edge(u, v);
        }
        g
    }
}

/// Like [`Decomposition`], but parts may share pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub host: Graph,
    pub edge_parts: Vec<(usize, usize)>,
    pub triangle_parts: Vec<Triangle>,
}

impl Cover {
    pub fn from_parts(host: Graph, parts: &[Part]) -> Self {
        let (edge_parts, triangle_parts) = split_parts(parts);
        Cover { host, edge_parts, triangle_parts }
    }

    pub fn cost(&self, alpha: &Rational) -> Rational {
        parts_cost(self.edge_parts.len(), self.triangle_parts.len(), alpha)
    }

    pub fn to_text(&self) -> String {
        render_parts(&self.edge_parts, &self.triangle_parts)
    }
}

/// Outcome of a successful cover check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCheck {
    pub cost: Rational,
    /// Host edges lying in more than one part, ascending.
    pub multiply_covered: Vec<(usize, usize)>,
}

/// Per-pair multiplicities of the parts; fails on the first part using a
/// non-edge of `g`.
fn tally(g: &Graph, edges: &[(usize, usize)], triangles: &[Triangle]) -> Result<Vec<Vec<u32>>> {
    let n = g.order();
    let mut count = vec![vec![0u32; n]; n];
    let mut hit = |part: String, pairs: &[(usize, usize)]| -> Result<()> {
        for &(u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(Error::NonEdgePart { part: part.clone(), u: u.min(v), v: u.max(v) });
            }
        }
        for &(u, v) in pairs {
            count[u.min(v)][u.max(v)] += 1;
        }
        Ok(())
    };
    for &(u, v) in edges {
        hit(Part::Edge(u, v).to_string(), &[(u, v)])?;
    }
    for t in triangles {
        hit(Part::Triangle(*t).to_string(), &t.pairs())?;
    }
    Ok(count)
}

/// Checks that the parts are subgraphs of `g` that partition `E(g)`, and
/// returns the cost. The first violation found is reported: non-edge parts
/// (in part order), then overlaps, then uncovered edges (ascending pairs).
pub fn validate_decomposition(g: &Graph, d: &Decomposition, alpha: &Rational) -> Result<Rational> {
    let count = tally(g, &d.edge_parts, &d.triangle_parts)?;
    for (u, v) in g.edges() {
        if count[u][v] > 1 {
            return Err(Error::Overlap { u, v });
        }
    }
    for (u, v) in g.edges() {
        if count[u][v] == 0 {
            return Err(Error::Uncovered { u, v });
        }
    }
    Ok(d.cost(alpha))
}

pub fn validate_cover(g: &Graph, c: &Cover, alpha: &Rational) -> Result<CoverCheck> {
    let count = tally(g, &c.edge_parts, &c.triangle_parts)?;
    let mut multiply_covered = Vec::new();
    for (u, v) in g.edges() {
        match count[u][v] {
            0 => return Err(Error::Uncovered { u, v }),
            1 => {}
            _ => multiply_covered.push((u, v)),
        }
    }
    Ok(CoverCheck { cost: c.cost(alpha), multiply_covered })
}

/// Minimum cost of a decomposition into edges (cost 2) and triangles
/// (cost `alpha`), with a witness attaining it.
pub fn pi3_alpha(g: &Graph, alpha: &Rational) -> Result<(Rational, Decomposition)> {
    pi3_alpha_with_budget(g, alpha, DEFAULT_NODE_BUDGET)
}

pub fn pi3_alpha_with_budget(g: &Graph, alpha: &Rational, budget: u64) -> Result<(Rational, Decomposition)> {
    let six = int(6);
    if *alpha >= six {
        let d = Decomposition { host: g.clone(), edge_parts: g.edges(), triangle_parts: vec![] };
        return Ok((d.cost(alpha), d));
    }
    let packing = max_triangle_packing_with_budget(g, budget)?;
    let d = decomposition_from_packing(g, &packing.witness);
    let cost = int(2 * g.edge_count() as i64) - (six - alpha) * int(packing.nu as i64);
    debug_assert_eq!(cost, d.cost(alpha));
    Ok((cost, d))
}

/// The given triangles plus every edge they leave uncovered.
pub fn decomposition_from_packing(g: &Graph, triangles: &[Triangle]) -> Decomposition {
    let mut rest = g.clone();
    for t in triangles {
        for (u, v) in t.pairs() {
            rest.remove_edge(u, v);
        }
    }
    Decomposition { host: g.clone(), edge_parts: rest.edges(), triangle_parts: triangles.to_vec() }
}

/// Triangle packing density `3 nu / C(n, 2)`.
pub fn nu_density(g: &Graph) -> Result<Rational> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderOutOfRange { n, min: 2, max: crate::graph::MAX_ORDER });
    }
    let nu = max_triangle_packing(g)?.nu;
    Ok(Rational::new((3 * nu as i64).into(), ((n * (n - 1) / 2) as i64).into()))
}

/// Edge density `e / C(n, 2)`.
pub fn edge_density(g: &Graph) -> Result<Rational> {
    let n = g.order();
    if n < 2 {
        return Err(Error::OrderOutOfRange { n, min: 2, max: crate::graph::MAX_ORDER });
    }
    let r = Rational::new((g.edge_count() as i64).into(), ((n * (n - 1) / 2) as i64).into());
    debug_assert!(r >= Rational::zero());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_unlabeled, make_named, parse_graph6, NamedKind};
    use crate::rational::frac;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k(n: usize) -> Graph {
        make_named(NamedKind::Complete, n, None).unwrap()
    }

    fn t2(n: usize) -> Graph {
        make_named(NamedKind::Turan2, n, None).unwrap()
    }

    #[test]
    fn validate_examples() {
        let three = int(3);
        let d = Decomposition { host: k(3), edge_parts: vec![], triangle_parts: vec![Triangle::new(0, 1, 2)] };
        assert_eq!(validate_decomposition(&k(3), &d, &three).unwrap(), int(3));

        let d = Decomposition { host: k(3), edge_parts: vec![(0, 1), (0, 2)], triangle_parts: vec![] };
        assert_eq!(validate_decomposition(&k(3), &d, &three), Err(Error::Uncovered { u: 1, v: 2 }));

        let d = Decomposition {
            host: k(4),
            edge_parts: vec![(0, 3), (1, 3), (2, 3)],
            triangle_parts: vec![Triangle::new(0, 1, 2)],
        };
        assert_eq!(validate_decomposition(&k(4), &d, &three).unwrap(), int(9));

        let d = Decomposition { host: k(4), edge_parts: vec![(0, 1)], triangle_parts: vec![Triangle::new(0, 1, 2)] };
        assert_eq!(validate_decomposition(&k(4), &d, &three), Err(Error::Overlap { u: 0, v: 1 }));

        let d = Decomposition { host: t2(4), edge_parts: vec![], triangle_parts: vec![Triangle::new(0, 2, 3)] };
        assert!(matches!(validate_decomposition(&t2(4), &d, &three), Err(Error::NonEdgePart { u: 2, v: 3, .. })));
    }

    #[test]
    fn cover_examples() {
        let three = int(3);
        let c = Cover { host: k(3), edge_parts: vec![], triangle_parts: vec![Triangle::new(0, 1, 2)] };
        assert_eq!(validate_cover(&k(3), &c, &three).unwrap().cost, int(3));

        let c = Cover { host: k(3), edge_parts: vec![(0, 1), (0, 2)], triangle_parts: vec![] };
        assert_eq!(validate_cover(&k(3), &c, &three), Err(Error::Uncovered { u: 1, v: 2 }));

        let c = Cover {
            host: k(4),
            edge_parts: vec![(2, 3)],
            triangle_parts: vec![Triangle::new(0, 1, 2), Triangle::new(0, 1, 3)],
        };
        let check = validate_cover(&k(4), &c, &three).unwrap();
        assert_eq!(check.cost, int(8));
        assert_eq!(check.multiply_covered, vec![(0, 1)]);
    }

    #[test]
    fn pi3_examples() {
        let three = int(3);
        assert_eq!(pi3_alpha(&k(7), &three).unwrap().0, int(21));
        assert_eq!(pi3_alpha(&t2(6), &three).unwrap().0, int(18));
        assert_eq!(pi3_alpha(&k(6), &three).unwrap().0, int(18));
        assert_eq!(pi3_alpha(&k(7), &int(7)).unwrap().0, int(42));
        assert_eq!(pi3_alpha(&k(7), &int(6)).unwrap().0, int(42));
        let (cost, d) = pi3_alpha(&k(7), &int(5)).unwrap();
        assert_eq!(cost, int(35));
        assert_eq!(d.validate(&int(5)).unwrap(), cost);
        let half = frac(7, 2);
        let (cost, d) = pi3_alpha(&k(6), &half).unwrap();
        assert_eq!(cost, int(30) - frac(5, 2) * int(4));
        assert_eq!(d.validate(&half).unwrap(), cost);
    }

    #[test]
    fn nu_density_examples() {
        assert_eq!(nu_density(&k(7)).unwrap(), int(1));
        assert_eq!(nu_density(&t2(7)).unwrap(), int(0));
        assert_eq!(nu_density(&k(6)).unwrap(), frac(4, 5));
        assert!(nu_density(&k(1)).is_err());
    }

    #[test]
    fn witness_identity_on_small_graphs() {
        let three = int(3);
        for n in 1..=6 {
            for g in enumerate_unlabeled(n).unwrap() {
                let nu = max_triangle_packing(&g).unwrap().nu;
                let (cost, d) = pi3_alpha(&g, &three).unwrap();
                assert_eq!(cost, int(2 * g.edge_count() as i64 - 3 * nu as i64));
                assert_eq!(validate_decomposition(&g, &d, &three).unwrap(), cost);
                assert!(nu <= g.edge_count() / 3);
            }
        }
    }

    #[test]
    fn greedy_decompositions_never_beat_optimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let three = int(3);
        for g in enumerate_unlabeled(6).unwrap() {
            let best = pi3_alpha(&g, &three).unwrap().0;
            for _ in 0..5 {
                let mut tris = g.triangles();
                tris.shuffle(&mut rng);
                let mut used = Graph::empty(6).unwrap();
                let mut chosen = vec![];
                for t in tris {
                    if t.pairs().iter().all(|&(u, v)| !used.has_edge(u, v)) {
                        for (u, v) in t.pairs() {
                            used.add_edge(u, v);
                        }
                        chosen.push(t);
                    }
                }
                let d = decomposition_from_packing(&g, &chosen);
                assert!(d.validate(&three).unwrap() >= best);
            }
        }
    }

    #[test]
    fn adding_edges_never_decreases_nu() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for g in enumerate_unlabeled(6).unwrap() {
            let complement = g.complement().edges();
            if complement.is_empty() {
                continue;
            }
            let (u, v) = complement[rng.gen_range(0..complement.len())];
            let mut h = g.clone();
            h.add_edge(u, v);
            assert!(max_triangle_packing(&h).unwrap().nu >= max_triangle_packing(&g).unwrap().nu);
        }
    }

    #[test]
    fn text_round_trip() {
        let (_, d) = pi3_alpha(&k(6), &int(3)).unwrap();
        let parts = parse_parts(&d.to_text()).unwrap();
        let back = Decomposition::from_parts(k(6), &parts);
        assert_eq!(back.validate(&int(3)).unwrap(), int(18));
        assert!(parse_parts("t 0 0 1").is_err());
        assert!(parse_parts("x 0 1").is_err());
        assert_eq!(parse_graph6("Bw").unwrap(), k(3));
    }
}
