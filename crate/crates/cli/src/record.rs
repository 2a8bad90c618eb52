//! Verification records and their CSV form.

use std::io::Write;

use crate::error::CliResult;
use crate::fmt_real;

pub const HEADER: [&str; 8] = [
    "suite",
    "params",
    "closed_form",
    "oracle",
    "abs_residual",
    "rel_residual",
    "tolerance",
    "pass",
];

/// One closed-form value checked against an independent evaluation.
///
/// `pass` holds when the absolute or the relative residual is within
/// `tolerance`. When the closed-form value is zero the relative residual is
/// reported equal to the absolute one.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub suite: String,
    pub params: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub abs_residual: f64,
    pub rel_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// The check is meant to fail; it is reported but does not fail the run.
    pub expected_fail: bool,
}

impl VerificationRecord {
    pub fn compare(
        suite: &str,
        params: impl Into<String>,
        closed_form: f64,
        oracle: f64,
        tolerance: f64,
    ) -> Self {
        Self::with_residual(
            suite,
            params,
            closed_form,
            oracle,
            (oracle - closed_form).abs(),
            tolerance,
        )
    }

    /// A record whose absolute residual is supplied by the caller, for example
    /// from exact arithmetic or as the size of an inequality violation.
    pub fn with_residual(
        suite: &str,
        params: impl Into<String>,
        closed_form: f64,
        oracle: f64,
        abs_residual: f64,
        tolerance: f64,
    ) -> Self {
        let rel_residual = if closed_form == 0.0 {
            abs_residual
        } else {
            abs_residual / closed_form.abs()
        };
        Self {
            suite: suite.to_string(),
            params: params.into(),
            closed_form,
            oracle,
            abs_residual,
            rel_residual,
            tolerance,
            pass: abs_residual <= tolerance || rel_residual <= tolerance,
            expected_fail: false,
        }
    }

    /// Marks the record as expected to fail; this is recorded in `params`.
    pub fn expect_fail(mut self) -> Self {
        self.expected_fail = true;
        self.params = if self.params.is_empty() {
            "expect=fail".to_string()
        } else {
            format!("{},expect=fail", self.params)
        };
        self
    }

    /// Whether the record counts against the exit status.
    pub fn is_failure(&self) -> bool {
        !self.pass && !self.expected_fail
    }

    fn fields(&self) -> [String; 8] {
        [
            self.suite.clone(),
            self.params.clone(),
            fmt_real(self.closed_form),
            fmt_real(self.oracle),
            fmt_real(self.abs_residual),
            fmt_real(self.rel_residual),
            fmt_real(self.tolerance),
            self.pass.to_string(),
        ]
    }
}

pub fn write_records<W: Write>(out: W, records: &[VerificationRecord]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in records {
        w.write_record(r.fields())?;
    }
    w.flush()?;
    Ok(())
}
