//! Plot-ready CSV tables of closed-form values.

use std::io::Write;

use l2disc::closedform::*;

use crate::error::{CliError, CliResult};
use crate::fmt_real;
use crate::params::Params;
use crate::suites::fibonacci_generator;

pub const TABLES: [&str; 3] = ["hammersley", "fibonacci_slope", "grid_ratio"];

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn write<W: Write>(&self, out: W) -> CliResult<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        w.flush()?;
        Ok(())
    }

    /// The values of a named column.
    pub fn column(&self, name: &str) -> Option<Vec<&str>> {
        let i = self.header.iter().position(|h| *h == name)?;
        Some(self.rows.iter().map(|r| r[i].as_str()).collect())
    }
}

pub fn build_table(name: &str, params: &Params) -> CliResult<Table> {
    match name {
        "hammersley" => hammersley_table(params),
        "fibonacci_slope" => fibonacci_slope_table(params),
        "grid_ratio" => grid_ratio_table(params),
        other => Err(CliError::UnknownTable(other.to_string())),
    }
}

/// Closed-form values for the `2^m`-point Hammersley set; `per_increment` is
/// the growth of the periodic value from `m - 1` to `m`, which tends to 1/16.
fn hammersley_table(params: &Params) -> CliResult<Table> {
    let mut rows = Vec::new();
    for m in params.range_or::<u32>("m", 0, 12)? {
        if m > 127 {
            return Err(CliError::BadParams(format!(
                "m = {m} is too large for this table"
            )));
        }
        let per = hammersley_periodic_sq(m);
        let increment = if m == 0 {
            String::new()
        } else {
            fmt_real(per - hammersley_periodic_sq(m - 1))
        };
        let extr = hammersley_extreme_sq(m);
        rows.push(vec![
            m.to_string(),
            (1u128 << m).to_string(),
            fmt_real(hammersley_standard_sq(m)),
            fmt_real(extr),
            fmt_real(per),
            increment,
            fmt_real(per / extr),
            fmt_real(hammersley_digital_mean_sq(m)),
        ]);
    }
    Ok(Table {
        header: vec![
            "m",
            "N",
            "standard_sq",
            "extreme_sq",
            "periodic_sq",
            "per_increment",
            "per_extr_ratio",
            "digital_mean_sq",
        ],
        rows,
    })
}

/// The trigonometric sum along the Fibonacci lattices. `slope` is
/// `trig_sum / (n q^2)` and `increment` the change of `trig_sum / q^2` from
/// `n - 1` to `n`; both tend to `4 / (15 sqrt 5)`.
fn fibonacci_slope_table(params: &Params) -> CliResult<Table> {
    let constant = fibonacci_slope_constant();
    let mut rows = Vec::new();
    let mut previous: Option<f64> = None;
    for n in params.range_or::<u32>("n", 5, 25)? {
        let (p, q) = fibonacci_generator(n)?;
        let f = lattice_closed_form(p, q)?;
        let qf = q as f64;
        let normalized = f.trig_sum / (qf * qf);
        let slope = if n == 0 {
            f64::NAN
        } else {
            normalized / f64::from(n)
        };
        let prior = match previous {
            Some(v) => Some(v),
            None if n > 0 => {
                let (pp, qp) = fibonacci_generator(n - 1)?;
                Some(trig_sum(pp, qp)? / (qp as f64 * qp as f64))
            }
            None => None,
        };
        rows.push(vec![
            n.to_string(),
            p.to_string(),
            q.to_string(),
            fmt_real(f.trig_sum),
            fmt_real(normalized),
            fmt_real(slope),
            prior.map(|v| fmt_real(normalized - v)).unwrap_or_default(),
            fmt_real(constant),
            fmt_real(f.standard_sq),
            fmt_real(f.extreme_sq),
            fmt_real(f.periodic_sq),
        ]);
        previous = Some(normalized);
    }
    Ok(Table {
        header: vec![
            "n",
            "p",
            "q",
            "trig_sum",
            "normalized",
            "slope",
            "increment",
            "constant",
            "standard_sq",
            "extreme_sq",
            "periodic_sq",
        ],
        rows,
    })
}

/// Periodic to extreme ratios: regular grids (ratio tends to 8) next to
/// Hammersley sets and Fibonacci lattices (ratio tends to 4).
fn grid_ratio_table(params: &Params) -> CliResult<Table> {
    let families: Vec<&str> = match params.get("set") {
        Some(s) => vec![s],
        None => vec!["grid", "hammersley", "fibonacci"],
    };
    let mut rows = Vec::new();
    let mut push = |family: &str, param: String, n: String, per: f64, extr: f64| {
        rows.push(vec![
            family.to_string(),
            param,
            n,
            fmt_real(per),
            fmt_real(extr),
            fmt_real(per / extr),
        ]);
    };
    for family in families {
        match family {
            "grid" => {
                let d: u32 = params.value_or("d", 2)?;
                for m in params.range_or::<u64>("m", 1, 1000)? {
                    let n = (m as u128).pow(d);
                    push(
                        "grid",
                        format!("m={m}"),
                        n.to_string(),
                        grid_periodic_sq(m, d)?,
                        grid_extreme_sq(m, d)?,
                    );
                }
            }
            "hammersley" => {
                for m in 0..=20u32 {
                    push(
                        "hammersley",
                        format!("m={m}"),
                        (1u64 << m).to_string(),
                        hammersley_periodic_sq(m),
                        hammersley_extreme_sq(m),
                    );
                }
            }
            "fibonacci" => {
                for n in 0..=25u32 {
                    let (p, q) = fibonacci_generator(n)?;
                    let f = lattice_closed_form(p, q)?;
                    push(
                        "fibonacci",
                        format!("n={n}"),
                        q.to_string(),
                        f.periodic_sq,
                        f.extreme_sq,
                    );
                }
            }
            other => return Err(CliError::BadParams(format!("unknown set '{other}'"))),
        }
    }
    Ok(Table {
        header: vec!["family", "param", "N", "periodic_sq", "extreme_sq", "ratio"],
        rows,
    })
}
