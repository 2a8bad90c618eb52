//! Squared L2 discrepancies: pair-sum formulas, one-dimensional forms, the
//! exponential-sum series, exact cell integration and shift averages.

mod cell_exact;
mod one_dim;
mod pair_sum;
mod shift_average;
mod spectral;

use std::fmt;
use std::str::FromStr;

pub use cell_exact::{cell_exact_sq, MAX_CELL_EXACT_POINTS};
pub use one_dim::{l2_extreme_sq_1d, l2_periodic_sq_1d};
pub use pair_sum::{
    l2_extreme_sq, l2_extreme_sq_with, l2_periodic_sq, l2_periodic_sq_with, l2_standard_sq,
    l2_standard_sq_with,
};
pub use shift_average::{
    digital_shift_average_exhaustive, shift_average_digital, shift_average_geometric, ShiftAverage,
};
pub use spectral::{diaphony_truncated, SpectralEstimate, SpectralWeights};

use crate::error::{Error, Result};
use crate::pointset::PointSet;
pub use crate::summation::Summation;

/// Squared values in `[-NEGATIVE_CLAMP, 0)` are rounding noise and clamp to zero.
pub const NEGATIVE_CLAMP: f64 = 1e-12;

/// Which family of test boxes the discrepancy integrates over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiscrepancyKind {
    /// Boxes anchored at the origin.
    Standard,
    /// Arbitrary axis-parallel boxes `[x, y)` with `x <= y`.
    Extreme,
    /// Boxes on the torus, wrapping around where `x > y`.
    Periodic,
}

impl DiscrepancyKind {
    pub const ALL: [DiscrepancyKind; 3] = [
        DiscrepancyKind::Standard,
        DiscrepancyKind::Extreme,
        DiscrepancyKind::Periodic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DiscrepancyKind::Standard => "standard",
            DiscrepancyKind::Extreme => "extreme",
            DiscrepancyKind::Periodic => "periodic",
        }
    }
}

impl fmt::Display for DiscrepancyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DiscrepancyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" | "std" => Ok(DiscrepancyKind::Standard),
            "extreme" | "extr" => Ok(DiscrepancyKind::Extreme),
            "periodic" | "per" => Ok(DiscrepancyKind::Periodic),
            other => Err(Error::InvalidParameter(format!(
                "unknown discrepancy kind '{other}'"
            ))),
        }
    }
}

/// How a reported value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    PairSum,
    OneDimOrdered,
    SpectralTruncated,
    CellExact,
    ShiftMc,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::PairSum => "pair_sum",
            Method::OneDimOrdered => "one_dim_ordered",
            Method::SpectralTruncated => "spectral_truncated",
            Method::CellExact => "cell_exact",
            Method::ShiftMc => "shift_mc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Squared discrepancies of one point set plus how they were computed.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    pub n_points: usize,
    pub dim: usize,
    pub standard_sq: Option<f64>,
    pub extreme_sq: Option<f64>,
    pub periodic_sq: Option<f64>,
    pub method: Method,
    pub summation: Summation,
    pub truncation_k: Option<u64>,
    pub mc_samples: Option<u64>,
}

impl DiscrepancyReport {
    /// All three squared discrepancies by the pair-sum formulas.
    pub fn pair_sum(points: &PointSet, summation: Summation) -> Result<Self> {
        Ok(Self {
            n_points: points.len(),
            dim: points.dim(),
            standard_sq: Some(l2_standard_sq_with(points, summation)?),
            extreme_sq: Some(l2_extreme_sq_with(points, summation)?),
            periodic_sq: Some(l2_periodic_sq_with(points, summation)?),
            method: Method::PairSum,
            summation,
            truncation_k: None,
            mc_samples: None,
        })
    }

    /// All three squared discrepancies by exact cell integration.
    pub fn cell_exact(points: &PointSet) -> Result<Self> {
        Ok(Self {
            n_points: points.len(),
            dim: points.dim(),
            standard_sq: Some(cell_exact_sq(points, DiscrepancyKind::Standard)?),
            extreme_sq: Some(cell_exact_sq(points, DiscrepancyKind::Extreme)?),
            periodic_sq: Some(cell_exact_sq(points, DiscrepancyKind::Periodic)?),
            method: Method::CellExact,
            summation: Summation::Naive,
            truncation_k: None,
            mc_samples: None,
        })
    }

    pub fn get(&self, kind: DiscrepancyKind) -> Option<f64> {
        match kind {
            DiscrepancyKind::Standard => self.standard_sq,
            DiscrepancyKind::Extreme => self.extreme_sq,
            DiscrepancyKind::Periodic => self.periodic_sq,
        }
    }

    /// Checks that the extreme value is dominated by the other two, up to `tol`.
    pub fn ordering_holds(&self, tol: f64) -> bool {
        let Some(extr) = self.extreme_sq else {
            return true;
        };
        self.standard_sq.is_none_or(|s| extr <= s + tol)
            && self.periodic_sq.is_none_or(|p| extr <= p + tol)
    }
}

/// Computes a squared discrepancy of the requested kind with the pair-sum formula.
pub fn l2_sq(points: &PointSet, kind: DiscrepancyKind) -> Result<f64> {
    match kind {
        DiscrepancyKind::Standard => l2_standard_sq(points),
        DiscrepancyKind::Extreme => l2_extreme_sq(points),
        DiscrepancyKind::Periodic => l2_periodic_sq(points),
    }
}

pub(crate) fn clamp_square(value: f64) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -NEGATIVE_CLAMP {
        log::warn!("clamping squared discrepancy {value:e} to zero");
        Ok(0.0)
    } else {
        Err(Error::NegativeSquare(value))
    }
}
