//! The O(N^2) pair-sum formulas for the three squared discrepancies.
//!
//! Rows `k` are evaluated independently (over `l >= k`, off-diagonal terms
//! doubled) and merged in index order, so the result does not depend on the
//! number of worker threads.

use rayon::prelude::*;

use super::clamp_square;
use crate::error::Result;
use crate::pointset::PointSet;
use crate::summation::{Accumulator, Summation};

/// Below this many points the rows are summed on the calling thread.
const PARALLEL_THRESHOLD: usize = 256;

fn symmetric_pair_sum<R, K>(points: &PointSet, mode: Summation, row_term: R, kernel: K) -> f64
where
    R: Fn(&[f64]) -> f64 + Sync,
    K: Fn(&[f64], &[f64]) -> f64 + Sync,
{
    let n = points.len();
    let dim = points.dim();
    let coords = points.coords();
    let row = |k: usize| {
        let xk = &coords[k * dim..(k + 1) * dim];
        let mut acc = Accumulator::new(mode);
        acc.add(row_term(xk));
        acc.add(kernel(xk, xk));
        for xl in coords[(k + 1) * dim..].chunks_exact(dim) {
            acc.add(2.0 * kernel(xk, xl));
        }
        acc
    };
    let rows: Vec<Accumulator> = if n >= PARALLEL_THRESHOLD {
        (0..n).into_par_iter().map(row).collect()
    } else {
        (0..n).map(row).collect()
    };
    rows.into_iter()
        .fold(Accumulator::new(mode), Accumulator::merge)
        .value()
}

/// Squared standard (anchored-box) L2 discrepancy, compensated summation.
pub fn l2_standard_sq(points: &PointSet) -> Result<f64> {
    l2_standard_sq_with(points, Summation::Compensated)
}

pub fn l2_standard_sq_with(points: &PointSet, mode: Summation) -> Result<f64> {
    let n = points.len() as f64;
    let d = points.dim() as i32;
    let const_term = n / 3f64.powi(d);
    let lin_factor = n / 2f64.powi(d - 1);
    let value = symmetric_pair_sum(
        points,
        mode,
        |x| const_term - lin_factor * x.iter().map(|c| 1.0 - c * c).product::<f64>(),
        |x, y| {
            x.iter()
                .zip(y)
                .map(|(a, b)| 1.0 - a.max(*b))
                .product::<f64>()
        },
    );
    clamp_square(value)
}

/// Squared extreme (arbitrary-box) L2 discrepancy, compensated summation.
pub fn l2_extreme_sq(points: &PointSet) -> Result<f64> {
    l2_extreme_sq_with(points, Summation::Compensated)
}

pub fn l2_extreme_sq_with(points: &PointSet, mode: Summation) -> Result<f64> {
    let n = points.len() as f64;
    let d = points.dim() as i32;
    let const_term = n / 12f64.powi(d);
    let lin_factor = n / 2f64.powi(d - 1);
    let value = symmetric_pair_sum(
        points,
        mode,
        |x| const_term - lin_factor * x.iter().map(|c| c * (1.0 - c)).product::<f64>(),
        |x, y| {
            x.iter()
                .zip(y)
                .map(|(a, b)| a.min(*b) - a * b)
                .product::<f64>()
        },
    );
    clamp_square(value)
}

/// Squared periodic (torus-box) L2 discrepancy, compensated summation.
///
/// The `-N^2 / 3^d` offset is distributed over the pairs so that each summand
/// is already a small residual.
pub fn l2_periodic_sq(points: &PointSet) -> Result<f64> {
    l2_periodic_sq_with(points, Summation::Compensated)
}

pub fn l2_periodic_sq_with(points: &PointSet, mode: Summation) -> Result<f64> {
    let offset = 3f64.powi(-(points.dim() as i32));
    let value = symmetric_pair_sum(
        points,
        mode,
        |_| 0.0,
        |x, y| {
            x.iter()
                .zip(y)
                .map(|(a, b)| {
                    let t = (a - b).abs();
                    0.5 - t + t * t
                })
                .product::<f64>()
                - offset
        },
    );
    clamp_square(value)
}
