//! Squared discrepancies of the `2^m`-point Hammersley set and its mean over
//! digital shifts.

use num_rational::BigRational;

use super::{int, pow2, ratio, to_f64};

/// `m^2/64 + 29m/192 + 3/8 - m/2^(m+4) + 1/2^(m+2) - 1/(9 2^(2m+3))`.
pub fn hammersley_standard_sq_exact(m: u32) -> BigRational {
    let mm = i64::from(m);
    ratio(mm * mm, 64) + ratio(29 * mm, 192) + ratio(3, 8) - int(mm) * pow2(-(mm + 4))
        + pow2(-(mm + 2))
        - ratio(1, 9) * pow2(-(2 * mm + 3))
}

/// `m/64 + 1/72 - 1/(9 4^(m+2))`.
pub fn hammersley_extreme_sq_exact(m: u32) -> BigRational {
    let mm = i64::from(m);
    ratio(mm, 64) + ratio(1, 72) - ratio(1, 9) * pow2(-(2 * mm + 4))
}

/// `m/16 + 1/9 + 1/(9 4^(m+1))`.
pub fn hammersley_periodic_sq_exact(m: u32) -> BigRational {
    let mm = i64::from(m);
    ratio(mm, 16) + ratio(1, 9) + ratio(1, 9) * pow2(-(2 * mm + 2))
}

/// Mean squared standard discrepancy over uniform digital shifts with
/// infinitely many digits: `m/24 + 5/36`.
pub fn hammersley_digital_mean_sq_exact(m: u32) -> BigRational {
    ratio(i64::from(m), 24) + ratio(5, 36)
}

/// Mean over the `4^m` shifts with `m` digits per coordinate:
/// `m/24 + 3/8 + 1/(4 2^m) - 1/(72 4^m)`.
pub fn hammersley_digital_mean_sq_mbit_exact(m: u32) -> BigRational {
    let mm = i64::from(m);
    ratio(mm, 24) + ratio(3, 8) + ratio(1, 4) * pow2(-mm) - ratio(1, 72) * pow2(-2 * mm)
}

pub fn hammersley_standard_sq(m: u32) -> f64 {
    to_f64(&hammersley_standard_sq_exact(m))
}

pub fn hammersley_extreme_sq(m: u32) -> f64 {
    to_f64(&hammersley_extreme_sq_exact(m))
}

pub fn hammersley_periodic_sq(m: u32) -> f64 {
    to_f64(&hammersley_periodic_sq_exact(m))
}

pub fn hammersley_digital_mean_sq(m: u32) -> f64 {
    to_f64(&hammersley_digital_mean_sq_exact(m))
}

pub fn hammersley_digital_mean_sq_mbit(m: u32) -> f64 {
    to_f64(&hammersley_digital_mean_sq_mbit_exact(m))
}
