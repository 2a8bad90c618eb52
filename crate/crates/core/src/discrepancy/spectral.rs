//! Truncated exponential-sum (diaphony) series for the periodic discrepancy.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::summation::NeumaierSum;

/// Largest number of frequency vectors evaluated by [`diaphony_truncated`].
const MAX_FREQUENCIES: u64 = 1 << 24;

/// The weight `r(k)`: `1` for `k = 0`, else `2 pi |k| / sqrt(6)`, extended to
/// vectors as a product over coordinates.
#[derive(Debug, Clone, Copy, Default)]
pub struct SpectralWeights;

impl SpectralWeights {
    pub fn r(k: i64) -> f64 {
        if k == 0 {
            1.0
        } else {
            2.0 * PI * (k.unsigned_abs() as f64) / 6f64.sqrt()
        }
    }

    pub fn r_vec(k: &[i64]) -> f64 {
        k.iter().map(|&kj| Self::r(kj)).product()
    }

    /// `1 / r(k)^2`, computed without forming `r(k)`.
    pub fn inverse_square(k: i64) -> f64 {
        if k == 0 {
            1.0
        } else {
            let k = k.unsigned_abs() as f64;
            6.0 / (4.0 * PI * PI * k * k)
        }
    }
}

/// A truncated series value with a rigorous bracket around the full series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralEstimate {
    pub value: f64,
    /// Upper bound on the omitted terms (all frequencies with some `|k_j| > K`).
    pub tail_bound: f64,
    /// Allowance for floating-point error in `value`.
    pub rounding: f64,
    pub k_max: u64,
}

impl SpectralEstimate {
    pub fn lower(&self) -> f64 {
        self.value - self.rounding
    }

    pub fn upper(&self) -> f64 {
        self.value + self.tail_bound + self.rounding
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower() <= x && x <= self.upper()
    }
}

/// `3^-d sum_{0 < |k|_inf <= K} |sum_h exp(2 pi i k.x_h)|^2 / r(k)^2`.
///
/// The tail bound uses `|exp-sum| <= N` together with
/// `sum_{|k| > K} 1/r(k)^2 < 3 / (pi^2 K)` per axis.
pub fn diaphony_truncated(points: &PointSet, k_max: u64) -> Result<SpectralEstimate> {
    if k_max == 0 {
        return Err(Error::InvalidParameter(
            "truncation K must be positive".into(),
        ));
    }
    let d = points.dim();
    let side = 2 * k_max + 1;
    let total = (0..d)
        .try_fold(1u64, |acc, _| acc.checked_mul(side))
        .filter(|&t| t <= MAX_FREQUENCIES)
        .ok_or_else(|| {
            Error::InvalidParameter(format!(
                "(2K+1)^d = {side}^{d} frequencies exceed the limit of {MAX_FREQUENCIES}"
            ))
        })? as usize;
    let side = side as usize;
    let k_max_i = k_max as i64;

    let mut sums = vec![Complex64::new(0.0, 0.0); total];
    let mut rows = vec![Complex64::new(0.0, 0.0); d * side];
    for p in points.points() {
        for (axis, &x) in p.iter().enumerate() {
            let row = &mut rows[axis * side..(axis + 1) * side];
            for (slot, k) in row.iter_mut().zip(-k_max_i..=k_max_i) {
                let t = k as f64 * x;
                let phase = 2.0 * PI * (t - t.floor());
                *slot = Complex64::new(phase.cos(), phase.sin());
            }
        }
        for (idx, acc) in sums.iter_mut().enumerate() {
            let mut rest = idx;
            let mut prod = Complex64::new(1.0, 0.0);
            for axis in 0..d {
                prod *= rows[axis * side + rest % side];
                rest /= side;
            }
            *acc += prod;
        }
    }

    let mut weights = vec![0.0; side];
    for (w, k) in weights.iter_mut().zip(-k_max_i..=k_max_i) {
        *w = SpectralWeights::inverse_square(k);
    }
    let center = (total - 1) / 2;
    let mut acc = NeumaierSum::new();
    for (idx, s) in sums.iter().enumerate() {
        if idx == center {
            continue;
        }
        let mut rest = idx;
        let mut w = 1.0;
        for _ in 0..d {
            w *= weights[rest % side];
            rest /= side;
        }
        acc += s.norm_sqr() * w;
    }
    let scale = 3f64.powi(-(d as i32));
    let value = scale * acc.value();

    let n = points.len() as f64;
    let per_axis_tail = 3.0 / (PI * PI * k_max as f64);
    let full = 1.5f64.powi(d as i32);
    let tail_mass = full - (1.5 - per_axis_tail).powi(d as i32);
    let tail_bound = scale * n * n * tail_mass;
    let rounding = 1e-12 * scale * n * n * (full - 1.0);
    Ok(SpectralEstimate {
        value,
        tail_bound,
        rounding,
        k_max,
    })
}
