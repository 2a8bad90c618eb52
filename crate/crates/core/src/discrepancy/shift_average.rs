//! Averages of the standard discrepancy over random geometric and digital shifts.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::l2_standard_sq;
use crate::error::{Error, Result};
use crate::pointset::{digital_shift, geometric_shift, DyadicShift, PointSet};
use crate::summation::NeumaierSum;

/// Largest `width * d` accepted by [`digital_shift_average_exhaustive`].
const MAX_EXHAUSTIVE_BITS: u32 = 20;

/// Sample mean and standard error of a Monte Carlo average.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftAverage {
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
}

impl ShiftAverage {
    fn from_samples(values: &[f64]) -> Self {
        let r = values.len() as f64;
        let mean = values.iter().copied().sum::<NeumaierSum>().value() / r;
        let ss = values
            .iter()
            .map(|v| (v - mean) * (v - mean))
            .sum::<NeumaierSum>()
            .value();
        let variance = ss / (r - 1.0);
        Self {
            mean,
            stderr: (variance / r).sqrt(),
            samples: values.len() as u64,
        }
    }

    /// Whether `target` lies within `sigmas` standard errors of the mean.
    pub fn within(&self, target: f64, sigmas: f64) -> bool {
        (self.mean - target).abs() <= sigmas * self.stderr
    }
}

fn check_samples(r: u64) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!(
            "a standard error needs at least 2 samples, got {r}"
        )));
    }
    Ok(())
}

/// Mean of `l2_standard_sq(P + delta)` over `r` uniform torus translations.
///
/// Shifts are drawn sequentially from the seeded stream and evaluated in
/// parallel, so the result depends only on `(P, r, seed)`.
pub fn shift_average_geometric(points: &PointSet, r: u64, seed: u64) -> Result<ShiftAverage> {
    check_samples(r)?;
    let d = points.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deltas: Vec<f64> = (0..r as usize * d).map(|_| rng.gen::<f64>()).collect();
    let values = deltas
        .par_chunks_exact(d)
        .map(|delta| l2_standard_sq(&geometric_shift(points, delta)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(ShiftAverage::from_samples(&values))
}

/// Mean of `l2_standard_sq(P xor delta)` over `r` uniform `width`-digit shifts.
pub fn shift_average_digital(
    points: &PointSet,
    r: u64,
    width: u32,
    seed: u64,
) -> Result<ShiftAverage> {
    check_samples(r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shifts = (0..r)
        .map(|_| DyadicShift::random(points.dim(), width, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let values = shifts
        .par_iter()
        .map(|delta| l2_standard_sq(&digital_shift(points, delta)?))
        .collect::<Result<Vec<f64>>>()?;
    Ok(ShiftAverage::from_samples(&values))
}

/// Exact mean of `l2_standard_sq(P xor delta)` over all `2^(width d)` shifts.
pub fn digital_shift_average_exhaustive(points: &PointSet, width: u32) -> Result<f64> {
    let d = points.dim() as u32;
    let bits = width
        .checked_mul(d)
        .filter(|&b| width >= 1 && b <= MAX_EXHAUSTIVE_BITS);
    let Some(bits) = bits else {
        return Err(Error::InvalidParameter(format!(
            "exhaustive averaging needs 1 <= width and width * d <= {MAX_EXHAUSTIVE_BITS}"
        )));
    };
    let mask = (1u64 << width) - 1;
    let values = (0..1u64 << bits)
        .into_par_iter()
        .map(|code| {
            let digits = (0..d).map(|axis| (code >> (axis * width)) & mask).collect();
            let delta = DyadicShift::from_bits(width, digits)?;
            l2_standard_sq(&digital_shift(points, &delta)?)
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(values.iter().copied().sum::<NeumaierSum>().value() / values.len() as f64)
}
