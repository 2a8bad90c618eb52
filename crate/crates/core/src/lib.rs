//! Squared L2 discrepancies (standard, extreme and periodic) of finite point
//! sets in the unit cube, with exact closed forms for Hammersley sets, rational
//! lattices and regular grids.

pub mod closedform;
pub mod discrepancy;
pub mod error;
pub mod numtheory;
pub mod pointset;
pub mod summation;

pub use discrepancy::{DiscrepancyKind, DiscrepancyReport, Method};
pub use error::{Error, Result};
pub use pointset::{DyadicShift, PointSet};
pub use summation::Summation;
