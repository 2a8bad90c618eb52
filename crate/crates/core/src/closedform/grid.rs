//! Squared discrepancies of the regular grid `{0, 1/m, ..., (m-1)/m}^d`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use super::{ratio, to_f64};
use crate::error::{Error, Result};

fn check(m: u64, d: u32) -> Result<BigRational> {
    if m == 0 || d == 0 {
        return Err(Error::InvalidParameter(format!(
            "grid needs m >= 1 and d >= 1, got m = {m}, d = {d}"
        )));
    }
    let m = BigInt::from(m);
    Ok(BigRational::from_integer(&m * &m))
}

/// `(m^2/3 + 1/6)^d - (m^2/3)^d`.
pub fn grid_periodic_sq_exact(m: u64, d: u32) -> Result<BigRational> {
    let m2 = check(m, d)?;
    let third = &m2 * ratio(1, 3);
    Ok((&third + ratio(1, 6)).pow(d) - third.pow(d))
}

/// `(m^(2d) - (m^2 - 1)^d) / 12^d`.
pub fn grid_extreme_sq_exact(m: u64, d: u32) -> Result<BigRational> {
    let m2 = check(m, d)?;
    let less = &m2 - ratio(1, 1);
    Ok((m2.pow(d) - less.pow(d)) * ratio(1, 12).pow(d))
}

pub fn grid_periodic_sq(m: u64, d: u32) -> Result<f64> {
    grid_periodic_sq_exact(m, d).map(|v| to_f64(&v))
}

pub fn grid_extreme_sq(m: u64, d: u32) -> Result<f64> {
    grid_extreme_sq_exact(m, d).map(|v| to_f64(&v))
}
