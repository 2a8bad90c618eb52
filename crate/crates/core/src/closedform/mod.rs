//! Closed-form discrepancy values for Hammersley sets, rational lattices and
//! regular grids, together with the sums and constants they are built from.

mod bilyk;
mod constants;
mod grid;
mod hammersley;
mod lattice;
mod relation;
mod sums;

pub use bilyk::{bilyk_identity, BilykIdentity};
pub use constants::{eta_constant, fibonacci_slope_constant};
pub use grid::{grid_extreme_sq, grid_extreme_sq_exact, grid_periodic_sq, grid_periodic_sq_exact};
pub use hammersley::{
    hammersley_digital_mean_sq, hammersley_digital_mean_sq_exact, hammersley_digital_mean_sq_mbit,
    hammersley_digital_mean_sq_mbit_exact, hammersley_extreme_sq, hammersley_extreme_sq_exact,
    hammersley_periodic_sq, hammersley_periodic_sq_exact, hammersley_standard_sq,
    hammersley_standard_sq_exact,
};
pub use lattice::{cos_trig_sum, lattice_closed_form, trig_sum, LatticeClosedForm};
pub use relation::{relation_residual, relation_residual_exact};
pub use sums::{
    direct_hammersley_sums, direct_hammersley_sums_mirrored, hammersley_sums, HammersleySums,
    MAX_DIRECT_SUMS_M,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `2^e` for any integer exponent.
pub(crate) fn pow2(e: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << e.unsigned_abs());
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// Nearest `f64`, with an explicit fallback for values outside its range.
pub(crate) fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}
