//! Exact re-check of a flag-algebra certificate bounding the average
//! fractional decomposition cost of 7-vertex induced subgraphs by 21.
//!
//! The certificate pairs the fractional cost with a quadratic form in the
//! densities of seven rooted 4-vertex flags, weighted by a fixed positive
//! semidefinite 7x7 matrix. Expanding the form over a 7-vertex graph `H`
//! gives a coefficient `c_H`; the bound holds when every `c_H <= 21`.

mod coefficient;
mod flags;
mod matrix;
mod psd;
mod report;

pub use coefficient::{coefficient_c, flag_vector, q_coefficient, turan_average_coefficient, ROOTED_SPLITS};
pub use flags::{classify_rooted_flag, flag_edges, FlagId};
pub use matrix::{matrix_m, CertMatrix, KERNEL_VECTOR, M_NUMERATORS, M_SCALE};
pub use psd::{lambda2, psd_check, Lambda2, PsdFindings};
pub use report::{verify_certificate, CertRow, CertificateReport, COEFFICIENT_BOUND};
