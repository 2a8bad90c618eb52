//! One-dimensional forms of the extreme and periodic discrepancies.

use super::clamp_square;
use crate::error::{Error, Result};
use crate::numtheory::bernoulli2_unchecked;
use crate::pointset::PointSet;
use crate::summation::NeumaierSum;

fn require_1d(points: &PointSet) -> Result<()> {
    if points.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: points.dim(),
        });
    }
    Ok(())
}

/// `1/12 + 1/2 sum_{n,m} (x_n - x_m - (n - m)/N)^2` over the sorted points.
///
/// Every summand is a square, so the sum has no cancellation.
pub fn l2_extreme_sq_1d(points: &PointSet) -> Result<f64> {
    require_1d(points)?;
    let mut xs = points.coords().to_vec();
    xs.sort_by(f64::total_cmp);
    let n = xs.len() as f64;
    let mut acc = NeumaierSum::new();
    acc += 1.0 / 12.0;
    for (i, &xi) in xs.iter().enumerate() {
        for (j, &xj) in xs.iter().enumerate().skip(i + 1) {
            let t = xi - xj + (j - i) as f64 / n;
            acc += t * t;
        }
    }
    clamp_square(acc.value())
}

/// `sum_{n,m} B_2(|x_n - x_m|)` with `B_2` the second Bernoulli polynomial.
pub fn l2_periodic_sq_1d(points: &PointSet) -> Result<f64> {
    require_1d(points)?;
    let xs = points.coords();
    let mut acc = NeumaierSum::new();
    acc += xs.len() as f64 / 6.0;
    for (i, &xi) in xs.iter().enumerate() {
        for &xj in &xs[i + 1..] {
            acc += 2.0 * bernoulli2_unchecked((xi - xj).abs());
        }
    }
    clamp_square(acc.value())
}
