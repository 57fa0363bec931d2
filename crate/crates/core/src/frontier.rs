//! Exact points `(d, nu_d)` with `d = e / C(n,2)` and `nu_d = 3 nu / C(n,2)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::max_triangle_packing;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_unlabeled, to_graph6, Graph, MAX_ENUM_ORDER};
use crate::rational::{self, int, to_f64, Rational};

pub const MAX_SAMPLED_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    Exhaustive,
    Sampled,
}

impl ScanMode {
    pub fn label(self) -> &'static str {
        match self {
            ScanMode::Exhaustive => "exhaustive",
            ScanMode::Sampled => "sampled",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrontierRow {
    pub graph6: String,
    pub edges: usize,
    pub nu: usize,
    #[serde(serialize_with = "rational::serde_display")]
    pub d: Rational,
    #[serde(serialize_with = "rational::serde_display")]
    pub nu_d: Rational,
}

impl FrontierRow {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let pairs = (n * n.saturating_sub(1) / 2).max(1) as i64;
        let nu = max_triangle_packing(g)?.nu;
        let e = g.edge_count();
        Ok(FrontierRow {
            graph6: to_graph6(g),
            edges: e,
            nu,
            d: Rational::new((e as i64).into(), pairs.into()),
            nu_d: Rational::new((3 * nu as i64).into(), pairs.into()),
        })
    }

    /// `nu_d - (2d - 1)`.
    pub fn gap(&self) -> Rational {
        &self.nu_d - (int(2) * &self.d - int(1))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FrontierScan {
    pub n: usize,
    pub mode: ScanMode,
    pub seed: Option<u64>,
    pub rows: Vec<FrontierRow>,
    /// Smallest `nu_d - 2d + 1` over all rows.
    #[serde(serialize_with = "rational::serde_display")]
    pub min_gap: Rational,
    /// First row attaining `min_gap`.
    pub witness: String,
    /// Every row has `0 <= nu_d <= d`.
    pub bounds_hold: bool,
}

impl FrontierScan {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("graph6,mode,edges,nu,d_num,d_den,nu_d_num,nu_d_den,d_decimal,nu_d_decimal\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{:.6},{:.6}\n",
                r.graph6,
                self.mode.label(),
                r.edges,
                r.nu,
                r.d.numer(),
                r.d.denom(),
                r.nu_d.numer(),
                r.nu_d.denom(),
                to_f64(&r.d),
                to_f64(&r.nu_d)
            ));
        }
        out
    }
}

fn summarize(n: usize, mode: ScanMode, seed: Option<u64>, rows: Vec<FrontierRow>) -> FrontierScan {
    let zero = int(0);
    let bounds_hold = rows.iter().all(|r| r.nu_d >= zero && r.nu_d <= r.d);
    let (witness, min_gap) = rows
        .iter()
        .map(|r| (r, r.gap()))
        .reduce(|a, b| if b.1 < a.1 { b } else { a })
        .map(|(r, g)| (r.graph6.clone(), g))
        .unwrap_or_default();
    FrontierScan { n, mode, seed, rows, min_gap, witness, bounds_hold }
}

/// One row per unlabelled graph of order `n`, ordered by canonical form.
pub fn scan_exhaustive(n: usize) -> Result<FrontierScan> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: 1, max: MAX_ENUM_ORDER });
    }
    let mut graphs = enumerate_unlabeled(n)?;
    graphs.sort_by_cached_key(|g| canonical_form(g).expect("enumerated orders are canonicalisable"));
    let rows = graphs.par_iter().map(FrontierRow::new).collect::<Result<Vec<_>>>()?;
    Ok(summarize(n, ScanMode::Exhaustive, None, rows))
}

/// `count` uniform labelled graphs of order `n`, in sample order.
pub fn scan_sampled(n: usize, count: usize, seed: u64) -> Result<FrontierScan> {
    if !(MAX_ENUM_ORDER + 1..=MAX_SAMPLED_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { n, min: MAX_ENUM_ORDER + 1, max: MAX_SAMPLED_ORDER });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut graphs = Vec::with_capacity(count);
    for _ in 0..count {
        let mut g = Graph::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if rng.gen::<bool>() {
                    g.add_edge(u, v);
                }
            }
        }
        graphs.push(g);
    }
    let rows = graphs.par_iter().map(FrontierRow::new).collect::<Result<Vec<_>>>()?;
    Ok(summarize(n, ScanMode::Sampled, Some(seed), rows))
}
