use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::coefficient::coefficient_c;
use super::matrix::{matrix_m, M_NUMERATORS, M_SCALE};
use super::psd::{lambda2, psd_check, Lambda2, PsdFindings};
use crate::graph::{canonical_form, enumerate_unlabeled, CanonicalForm};
use crate::rational::{self, int, Rational};

/// The claimed upper bound on every coefficient.
pub const COEFFICIENT_BOUND: i64 = 21;

fn ser_graph6<S: Serializer>(cf: &CanonicalForm, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(cf)
}

fn ser_graph6_list<S: Serializer>(cfs: &[CanonicalForm], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(cfs.iter().map(|c| c.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertRow {
    #[serde(serialize_with = "ser_graph6")]
    pub canonical: CanonicalForm,
    pub edges: usize,
    #[serde(serialize_with = "rational::serde_display")]
    pub pi3f: Rational,
    #[serde(serialize_with = "rational::serde_display")]
    pub q: Rational,
    #[serde(serialize_with = "rational::serde_display")]
    pub c: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateReport {
    #[serde(skip)]
    pub rows: Vec<CertRow>,
    pub row_count: usize,
    #[serde(serialize_with = "rational::serde_display")]
    pub max: Rational,
    #[serde(serialize_with = "ser_graph6_list")]
    pub maximizers: Vec<CanonicalForm>,
    /// Every coefficient is at most [`COEFFICIENT_BOUND`].
    pub verdict: bool,
    #[serde(serialize_with = "ser_graph6_list")]
    pub violations: Vec<CanonicalForm>,
    /// Every `q` lies between the smallest and largest entry of `M`.
    pub q_in_entry_range: bool,
    pub psd: PsdFindings,
    pub lambda2: Lambda2,
}

impl CertificateReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("canonical_form,edges,pi3f_num,pi3f_den,q_num,q_den,c_num,c_den\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.canonical,
                r.edges,
                r.pi3f.numer(),
                r.pi3f.denom(),
                r.q.numer(),
                r.q.denom(),
                r.c.numer(),
                r.c.denom()
            ));
        }
        out
    }
}

/// Computes `c_H` for every 7-vertex graph and checks it against the bound,
/// together with the PSD structure of `M`.
pub fn verify_certificate() -> CertificateReport {
    let graphs = enumerate_unlabeled(7).expect("order 7 is enumerable");
    let mut rows: Vec<CertRow> = graphs
        .par_iter()
        .map(|g| {
            let (c, pi3f, q) = coefficient_c(g).expect("7-vertex graph");
            CertRow { canonical: canonical_form(g).expect("order 7"), edges: g.edge_count(), pi3f, q, c }
        })
        .collect();
    rows.sort_by_key(|r| r.canonical);
    let max = rows.iter().map(|r| r.c.clone()).max().expect("nonempty");
    let maximizers: Vec<CanonicalForm> = rows.iter().filter(|r| r.c == max).map(|r| r.canonical).collect();
    let bound = int(COEFFICIENT_BOUND);
    let violations: Vec<CanonicalForm> = rows.iter().filter(|r| r.c > bound).map(|r| r.canonical).collect();
    let entries = M_NUMERATORS.iter().flatten();
    let lo = Rational::new((*entries.clone().min().unwrap()).into(), M_SCALE.into());
    let hi = Rational::new((*entries.max().unwrap()).into(), M_SCALE.into());
    let q_in_entry_range = rows.iter().all(|r| r.q >= lo && r.q <= hi);
    let m = matrix_m();
    let psd = psd_check(&m).expect("M is symmetric");
    let lambda2 = lambda2(&m).expect("M is PSD");
    CertificateReport {
        row_count: rows.len(),
        verdict: violations.is_empty(),
        rows,
        max,
        maximizers,
        violations,
        q_in_entry_range,
        psd,
        lambda2,
    }
}
