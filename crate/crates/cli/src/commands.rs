//! The `gen` and `disc` subcommands as library functions.

use std::io::Write;

use l2disc::discrepancy::*;
use l2disc::pointset::*;

use crate::error::{bad, CliError, CliResult};
use crate::fmt_real;
use crate::params::Params;

pub const GENERATORS: [&str; 5] = ["hammersley", "lattice", "fibonacci", "grid", "random"];

/// Builds a point set. `seed` is required for random sets, either as a
/// parameter or from the command line.
pub fn generate(kind: &str, params: &Params, seed: Option<u64>) -> CliResult<PointSet> {
    let set = match kind {
        "hammersley" => hammersley(params.require("m")?)?,
        "lattice" => rational_lattice(params.require("p")?, params.require("q")?)?,
        "fibonacci" => fibonacci_lattice(params.require("n")?)?,
        "grid" => regular_grid(params.require("m")?, params.value_or("d", 2)?)?,
        "random" => {
            let seed = params
                .value("seed")?
                .or(seed)
                .ok_or_else(|| bad("random point sets need an explicit seed"))?;
            random_pointset(params.require("n")?, params.value_or("d", 2)?, seed)?
        }
        other => {
            return Err(bad(format!(
                "unknown point set '{other}', expected one of {}",
                GENERATORS.join(", ")
            )))
        }
    };
    Ok(set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscMethod {
    PairSum,
    CellExact,
    Spectral,
    OneDim,
    ShiftMc,
}

impl DiscMethod {
    pub fn parse(s: &str) -> CliResult<Self> {
        match s {
            "pair_sum" => Ok(Self::PairSum),
            "cell_exact" => Ok(Self::CellExact),
            "spectral" | "spectral_truncated" => Ok(Self::Spectral),
            "one_dim" | "one_dim_ordered" => Ok(Self::OneDim),
            "shift_mc" => Ok(Self::ShiftMc),
            other => Err(bad(format!("unknown method '{other}'"))),
        }
    }

    pub fn method(self) -> Method {
        match self {
            Self::PairSum => Method::PairSum,
            Self::CellExact => Method::CellExact,
            Self::Spectral => Method::SpectralTruncated,
            Self::OneDim => Method::OneDimOrdered,
            Self::ShiftMc => Method::ShiftMc,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscOptions {
    pub method: DiscMethod,
    pub summation: Summation,
    /// Truncation for the spectral method.
    pub k_max: u64,
    /// Sample count and seed for the shift Monte Carlo method.
    pub samples: u64,
    pub seed: Option<u64>,
}

/// One output row. `extra` is the tail bound (spectral) or the standard
/// error (shift Monte Carlo).
#[derive(Debug, Clone, PartialEq)]
pub struct DiscRow {
    pub kind: DiscrepancyKind,
    pub n: usize,
    pub d: usize,
    pub method: Method,
    pub value_sq: f64,
    pub extra: Option<f64>,
}

fn unsupported(method: DiscMethod, reason: impl Into<String>) -> CliError {
    CliError::MethodUnsupportedForInput {
        method: method.method().name().to_string(),
        reason: reason.into(),
    }
}

pub fn discrepancies(
    points: &PointSet,
    kinds: &[DiscrepancyKind],
    opts: &DiscOptions,
) -> CliResult<Vec<DiscRow>> {
    let method = opts.method;
    let mut rows = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let (value_sq, extra) = match method {
            DiscMethod::PairSum => {
                let v = match kind {
                    DiscrepancyKind::Standard => l2_standard_sq_with(points, opts.summation)?,
                    DiscrepancyKind::Extreme => l2_extreme_sq_with(points, opts.summation)?,
                    DiscrepancyKind::Periodic => l2_periodic_sq_with(points, opts.summation)?,
                };
                (v, None)
            }
            DiscMethod::CellExact => {
                if points.dim() > 2 || points.len() > MAX_CELL_EXACT_POINTS {
                    return Err(unsupported(
                        method,
                        format!(
                            "d = {}, N = {} (needs d <= 2, N <= {MAX_CELL_EXACT_POINTS})",
                            points.dim(),
                            points.len()
                        ),
                    ));
                }
                (cell_exact_sq(points, kind)?, None)
            }
            DiscMethod::OneDim => {
                if points.dim() != 1 {
                    return Err(unsupported(method, format!("d = {}", points.dim())));
                }
                match kind {
                    DiscrepancyKind::Extreme => (l2_extreme_sq_1d(points)?, None),
                    DiscrepancyKind::Periodic => (l2_periodic_sq_1d(points)?, None),
                    DiscrepancyKind::Standard => {
                        return Err(unsupported(method, "the standard kind"))
                    }
                }
            }
            DiscMethod::Spectral => {
                if kind != DiscrepancyKind::Periodic {
                    return Err(unsupported(method, format!("the {kind} kind")));
                }
                let est = diaphony_truncated(points, opts.k_max)?;
                (est.value, Some(est.tail_bound + est.rounding))
            }
            DiscMethod::ShiftMc => {
                if kind != DiscrepancyKind::Periodic {
                    return Err(unsupported(method, format!("the {kind} kind")));
                }
                let seed = opts
                    .seed
                    .ok_or_else(|| bad("the shift_mc method needs an explicit seed"))?;
                let avg = shift_average_geometric(points, opts.samples, seed)?;
                (avg.mean, Some(avg.stderr))
            }
        };
        rows.push(DiscRow {
            kind,
            n: points.len(),
            d: points.dim(),
            method: method.method(),
            value_sq,
            extra,
        });
    }
    Ok(rows)
}

pub fn write_disc<W: Write>(out: W, method: DiscMethod, rows: &[DiscRow]) -> CliResult<()> {
    let mut header = vec!["kind", "N", "d", "method", "value_sq", "value"];
    match method {
        DiscMethod::Spectral => header.push("tail_bound"),
        DiscMethod::ShiftMc => header.push("stderr"),
        _ => {}
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(&header)?;
    for r in rows {
        let mut fields = vec![
            r.kind.name().to_string(),
            r.n.to_string(),
            r.d.to_string(),
            r.method.name().to_string(),
            fmt_real(r.value_sq),
            fmt_real(r.value_sq.max(0.0).sqrt()),
        ];
        if let Some(e) = r.extra {
            fields.push(fmt_real(e));
        }
        w.write_record(&fields)?;
    }
    w.flush()?;
    Ok(())
}

pub fn parse_kinds(list: &[String]) -> CliResult<Vec<DiscrepancyKind>> {
    list.iter()
        .map(|k| k.trim().parse::<DiscrepancyKind>().map_err(CliError::from))
        .collect()
}
