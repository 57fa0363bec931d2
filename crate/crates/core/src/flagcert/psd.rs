//! Exact PSD analysis of a symmetric rational matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::matrix::CertMatrix;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Outcome of exact symmetric elimination.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PsdFindings {
    pub dim: usize,
    pub rank: usize,
    /// Sign of each pivot in elimination order. A 2x2 pivot block
    /// contributes one `+1` and one `-1`.
    pub pivot_signs: Vec<i8>,
    pub positive: usize,
    pub negative: usize,
    pub is_psd: bool,
    /// Primitive integer vectors spanning the kernel, first nonzero entry positive.
    #[serde(serialize_with = "ser_int_rows")]
    pub kernel_basis: Vec<Vec<BigInt>>,
}

fn ser_int_rows<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
    text.serialize(s)
}

/// Smallest nonzero eigenvalue, bracketed by exact rationals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lambda2 {
    pub value: f64,
    /// No nonzero eigenvalue lies below `lower`.
    #[serde(serialize_with = "rational::serde_display")]
    pub lower: Rational,
    /// At least one nonzero eigenvalue lies at or below `upper`.
    #[serde(serialize_with = "rational::serde_display")]
    pub upper: Rational,
}

struct Inertia {
    signs: Vec<i8>,
    pos: usize,
    neg: usize,
}

/// Inertia of a symmetric matrix by congruence (Sylvester's law).
fn inertia(rows: &[Vec<Rational>]) -> Inertia {
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut live: Vec<usize> = (0..a.len()).collect();
    let mut out = Inertia { signs: Vec::new(), pos: 0, neg: 0 };
    loop {
        if let Some(k) = live.iter().position(|&i| !a[i][i].is_zero()) {
            let p = live.remove(k);
            let piv = a[p][p].clone();
            for &i in &live {
                if a[i][p].is_zero() {
                    continue;
                }
                let f = &a[i][p] / &piv;
                for &j in &live {
                    let d = &f * &a[p][j];
                    a[i][j] -= d;
                }
            }
            if piv.is_positive() {
                out.signs.push(1);
                out.pos += 1;
            } else {
                out.signs.push(-1);
                out.neg += 1;
            }
            continue;
        }
        let pair = live
            .iter()
            .enumerate()
            .flat_map(|(x, &i)| live[x + 1..].iter().map(move |&j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero());
        let Some((p, q)) = pair else { break };
        // Both diagonals are zero: the block [[0, b], [b, 0]] has inertia (1, 1).
        live.retain(|&i| i != p && i != q);
        let b = a[p][q].clone();
        let b2 = &b * &b;
        for &i in &live {
            for &j in &live {
                // Schur complement of [[0, b], [b, 0]]: subtract (a_ip a_qj + a_iq a_pj) / b.
                let d = (&a[i][p] * &a[q][j] + &a[i][q] * &a[p][j]) * &b / &b2;
                a[i][j] -= d;
            }
        }
        out.signs.extend([1, -1]);
        out.pos += 1;
        out.neg += 1;
    }
    out
}

/// Kernel basis by reduced row echelon form.
fn kernel(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivot_cols.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[row][free].clone();
            }
            primitive(&v)
        })
        .collect()
}

fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

pub fn psd_check(m: &CertMatrix) -> Result<PsdFindings> {
    if let Some((i, j)) = m.asymmetry() {
        return Err(Error::Asymmetric { i, j });
    }
    let inr = inertia(&m.rows);
    Ok(PsdFindings {
        dim: m.dim(),
        rank: inr.pos + inr.neg,
        pivot_signs: inr.signs,
        positive: inr.pos,
        negative: inr.neg,
        is_psd: inr.neg == 0,
        kernel_basis: kernel(&m.rows),
    })
}

/// Number of eigenvalues of `m` strictly below `t`.
fn count_below(m: &CertMatrix, t: &Rational) -> usize {
    let shifted: Vec<Vec<Rational>> = m
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().enumerate().map(|(j, x)| if i == j { x - t } else { x.clone() }).collect())
        .collect();
    inertia(&shifted).neg
}

/// Smallest nonzero eigenvalue of a PSD matrix, to within `1e-10`.
///
/// Eigenvalue counts at each probe come from the exact inertia of `M - tI`.
pub fn lambda2(m: &CertMatrix) -> Result<Lambda2> {
    let f = psd_check(m)?;
    if !f.is_psd {
        return Err(Error::InvalidArgument("lambda2 needs a positive semidefinite matrix".into()));
    }
    if f.rank == 0 {
        return Err(Error::InvalidArgument("lambda2 needs a nonzero matrix".into()));
    }
    let nullity = f.dim - f.rank;
    // The trace bounds every eigenvalue of a PSD matrix.
    let trace: Rational = (0..m.dim()).map(|i| m.get(i, i).clone()).sum();
    let mut lo = Rational::zero();
    let mut hi = trace.ceil() + Rational::one();
    let tol = Rational::new(BigInt::one(), BigInt::from(10u64.pow(10)));
    let two = Rational::from_integer(2.into());
    while &hi - &lo > tol {
        let mid = (&lo + &hi) / &two;
        if count_below(m, &mid) > nullity {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let value = rational::to_f64(&((&lo + &hi) / two));
    Ok(Lambda2 { value, lower: lo, upper: hi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagcert::matrix::{matrix_m, KERNEL_VECTOR};
    use crate::rational::int;

    #[test]
    fn m_structure() {
        let f = psd_check(&matrix_m()).unwrap();
        assert_eq!(f.rank, 6);
        assert_eq!(f.positive, 6);
        assert!(f.pivot_signs.iter().all(|&s| s == 1));
        assert!(f.is_psd);
        let expect: Vec<BigInt> = KERNEL_VECTOR.iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(f.kernel_basis, vec![expect]);
        let v: Vec<Rational> = KERNEL_VECTOR.iter().map(|&x| int(x)).collect();
        assert!(matrix_m().mul_vec(&v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn identity_and_diagonal() {
        let f = psd_check(&CertMatrix::identity(7)).unwrap();
        assert_eq!((f.rank, f.kernel_basis.len()), (7, 0));
        assert!((lambda2(&CertMatrix::identity(7)).unwrap().value - 1.0).abs() < 1e-9);
        let d = CertMatrix::diagonal(&[0, 2, 3, 4, 5, 6, 7]);
        assert!((lambda2(&d).unwrap().value - 2.0).abs() < 1e-9);
        assert_eq!(psd_check(&d).unwrap().kernel_basis, vec![vec![1, 0, 0, 0, 0, 0, 0].into_iter().map(BigInt::from).collect::<Vec<_>>()]);
    }

    #[test]
    fn m_lambda2() {
        let l = lambda2(&matrix_m()).unwrap();
        assert!((l.value - 0.0005228).abs() < 1e-6, "{}", l.value);
        assert!(l.lower < l.upper);
    }

    #[test]
    fn indefinite_and_asymmetric() {
        let m = CertMatrix::from_integers(&[vec![0, 1], vec![1, 0]], 1).unwrap();
        let f = psd_check(&m).unwrap();
        assert_eq!((f.positive, f.negative, f.is_psd), (1, 1, false));
        assert!(lambda2(&m).is_err());
        let a = CertMatrix::from_integers(&[vec![1, 2], vec![3, 1]], 1).unwrap();
        assert!(matches!(psd_check(&a), Err(Error::Asymmetric { i: 0, j: 1 })));
    }

    #[test]
    fn inertia_matches_gram_rank() {
        // B^T B has rank = rank(B) and is PSD; signs from a congruent matrix agree.
        let b = [[1i64, 2, 0, -1], [0, 1, 1, 1], [1, 3, 1, 0]];
        let rows: Vec<Vec<i64>> =
            (0..4).map(|i| (0..4).map(|j| (0..3).map(|k| b[k][i] * b[k][j]).sum()).collect()).collect();
        let f = psd_check(&CertMatrix::from_integers(&rows, 1).unwrap()).unwrap();
        assert_eq!((f.rank, f.is_psd, f.kernel_basis.len()), (2, true, 2));
        let neg: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let g = psd_check(&CertMatrix::from_integers(&neg, 1).unwrap()).unwrap();
        assert_eq!((g.negative, g.positive), (2, 0));
    }
}
