use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Common denominator of the published matrix.
pub const M_SCALE: i64 = 12_000_000_000;

#[rustfmt::skip]
pub const M_NUMERATORS: [[i64; 7]; 7] = [
    [ 1800000000,  2444365956,   640188285, -1524146769,  1386815580,  -732139362, -129387078],
    [ 2444365956,  4759879134,  1177441152, -1783771230,  2546923788, -1397639394, -143552208],
    [  640188285,  1177441152,   484273772,  -317303211,  1038156300,  -591902130,   -6783162],
    [-1524146769, -1783771230,  -317303211,  1558870290,  -651906630,   305728704,  154602378],
    [ 1386815580,  2546923788,  1038156300,  -651906630,  2285399634, -1283125950,  -10755036],
    [ -732139362, -1397639394,  -591902130,   305728704, -1283125950,   734039016,   -1621938],
    [ -129387078,  -143552208,    -6783162,   154602378,   -10755036,    -1621938,   23860164],
];

/// The limiting flag vector of balanced complete bipartite graphs, up to scale.
pub const KERNEL_VECTOR: [i64; 7] = [1, 0, 3, 1, 0, 3, 0];

/// Square matrix of exact rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct CertMatrix {
    pub rows: Vec<Vec<Rational>>,
}

impl CertMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row of length {} in a {n}x{n} matrix", r.len())));
        }
        Ok(CertMatrix { rows })
    }

    pub fn from_integers(rows: &[Vec<i64>], denominator: i64) -> Result<Self> {
        let den = BigInt::from(denominator);
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::new(BigInt::from(v), den.clone())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1; n])
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let n = d.len();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rational::from_integer(d[i].into()) } else { Rational::zero() }).collect())
            .collect();
        CertMatrix { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    /// First asymmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| self.rows[i][j] != self.rows[j][i])
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// `v^T M v`.
    pub fn quadratic_form(&self, v: &[Rational]) -> Rational {
        self.mul_vec(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// The certificate matrix: the published integers over `12 * 10^9`.
pub fn matrix_m() -> CertMatrix {
    let rows: Vec<Vec<i64>> = M_NUMERATORS.iter().map(|r| r.to_vec()).collect();
    CertMatrix::from_integers(&rows, M_SCALE).expect("7x7")
}
