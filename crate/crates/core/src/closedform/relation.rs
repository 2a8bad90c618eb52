//! The linear relation `per^2 = 4 extr^2 + 1/18 + 1/(18 N^2)` satisfied by
//! Hammersley sets and rational lattices in two dimensions.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ratio;

/// `per_sq - 4 extr_sq - 1/18 - 1/(18 N^2)`.
pub fn relation_residual(per_sq: f64, extr_sq: f64, n: u64) -> f64 {
    let n = n as f64;
    per_sq - 4.0 * extr_sq - 1.0 / 18.0 - 1.0 / (18.0 * n * n)
}

pub fn relation_residual_exact(per_sq: &BigRational, extr_sq: &BigRational, n: u64) -> BigRational {
    let n = BigInt::from(n);
    let n2 = BigRational::from_integer(&n * &n);
    per_sq - ratio(4, 1) * extr_sq - ratio(1, 18) - (ratio(18, 1) * n2).recip()
}
