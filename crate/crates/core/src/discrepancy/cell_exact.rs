//! Exact integration of the local discrepancy over cells of the box-parameter
//! space, for small point sets in one or two dimensions.
//!
//! On each axis the box parameters are split at the point coordinates. Inside
//! a cell the set of covered points is constant, so the squared local
//! discrepancy `(c - N vol)^2` integrates to `c^2 M_0 - 2cN M_1 + N^2 M_2`,
//! where `M_j` is the product over axes of the moments of the interval length.
//! This is independent of the pair-sum identities and serves as their oracle.

use super::{clamp_square, DiscrepancyKind};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// Largest point set accepted by [`cell_exact_sq`].
pub const MAX_CELL_EXACT_POINTS: usize = 16;

#[derive(Debug, Clone, Copy)]
struct Cell {
    /// Bit `h` is set when point `h` lies in the interval on this axis.
    mask: u32,
    /// Integrals of `length^j`, `j = 0, 1, 2`, over the cell.
    moments: [f64; 3],
}

/// `int_a^b int_c^d (y - x)^j dy dx` for `b <= c`.
fn rectangle_moment(j: i32, a: f64, b: f64, c: f64, d: f64) -> f64 {
    let g = |u: f64| u.powi(j + 2) / f64::from((j + 1) * (j + 2));
    g(d - a) + g(c - b) - g(d - b) - g(c - a)
}

/// `int int_{a < x < y < a + h} (y - x)^j`.
fn triangle_moment(j: i32, h: f64) -> f64 {
    h.powi(j + 2) / f64::from((j + 1) * (j + 2))
}

/// Converts moments of `u` into moments of `1 - u`.
fn complement_moments(m: [f64; 3]) -> [f64; 3] {
    [m[0], m[0] - m[1], m[0] - 2.0 * m[1] + m[2]]
}

fn membership(coords: &[f64], pred: impl Fn(f64) -> bool) -> u32 {
    coords
        .iter()
        .enumerate()
        .filter(|(_, &p)| pred(p))
        .fold(0, |mask, (h, _)| mask | (1 << h))
}

fn axis_cells(coords: &[f64], kind: DiscrepancyKind) -> Vec<Cell> {
    let mut breaks: Vec<f64> = coords.to_vec();
    breaks.push(0.0);
    breaks.push(1.0);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();
    let intervals = breaks.len() - 1;
    let mut cells = Vec::new();
    match kind {
        DiscrepancyKind::Standard => {
            for s in 0..intervals {
                let (a, b) = (breaks[s], breaks[s + 1]);
                let moments = [0, 1, 2].map(|j| (b.powi(j + 1) - a.powi(j + 1)) / f64::from(j + 1));
                cells.push(Cell {
                    mask: membership(coords, |p| p <= a),
                    moments,
                });
            }
        }
        DiscrepancyKind::Extreme | DiscrepancyKind::Periodic => {
            let periodic = kind == DiscrepancyKind::Periodic;
            for s in 0..intervals {
                let (a, b) = (breaks[s], breaks[s + 1]);
                for t in 0..intervals {
                    let (c, d) = (breaks[t], breaks[t + 1]);
                    if s < t {
                        cells.push(Cell {
                            mask: membership(coords, |p| b <= p && p <= c),
                            moments: [0, 1, 2].map(|j| rectangle_moment(j, a, b, c, d)),
                        });
                    } else if s == t {
                        let tri = [0, 1, 2].map(|j| triangle_moment(j, b - a));
                        cells.push(Cell {
                            mask: 0,
                            moments: tri,
                        });
                        if periodic {
                            cells.push(Cell {
                                mask: membership(coords, |_| true),
                                moments: complement_moments(tri),
                            });
                        }
                    } else if periodic {
                        let inside = [0, 1, 2].map(|j| rectangle_moment(j, c, d, a, b));
                        cells.push(Cell {
                            mask: membership(coords, |p| p <= c || p >= b),
                            moments: complement_moments(inside),
                        });
                    }
                }
            }
        }
    }
    cells
}

fn cell_term(count: u32, n: f64, m0: f64, m1: f64, m2: f64) -> f64 {
    let c = f64::from(count);
    c * c * m0 - 2.0 * c * n * m1 + n * n * m2
}

/// Squared L2 discrepancy by exact cell integration (`d <= 2`, `N <= 16`).
pub fn cell_exact_sq(points: &PointSet, kind: DiscrepancyKind) -> Result<f64> {
    let dim = points.dim();
    if dim > 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: dim,
        });
    }
    if points.len() > MAX_CELL_EXACT_POINTS {
        return Err(Error::TooManyPoints {
            max: MAX_CELL_EXACT_POINTS,
            found: points.len(),
        });
    }
    let n = points.len() as f64;
    let first = axis_cells(&points.axis(0), kind);
    let mut total = 0.0;
    if dim == 1 {
        for c in &first {
            total += cell_term(
                c.mask.count_ones(),
                n,
                c.moments[0],
                c.moments[1],
                c.moments[2],
            );
        }
    } else {
        let second = axis_cells(&points.axis(1), kind);
        for c in &first {
            for e in &second {
                total += cell_term(
                    (c.mask & e.mask).count_ones(),
                    n,
                    c.moments[0] * e.moments[0],
                    c.moments[1] * e.moments[1],
                    c.moments[2] * e.moments[2],
                );
            }
        }
    }
    clamp_square(total)
}
