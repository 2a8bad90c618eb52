//! The identity between a lattice sum over the dual lattice and the
//! trigonometric sum `sum_r 1 / (sin^2(pi r/q) sin^2(pi r p/q))`.

use std::f64::consts::PI;

use super::lattice::trig_sum;
use crate::error::{Error, Result};
use crate::summation::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BilykIdentity {
    /// `sum 1/(k1^2 k2^2)` over `0 < |k1|, |k2| <= K`, both nonzero mod `q`,
    /// with `k1 + k2 p = 0 mod q`.
    pub lhs_truncated: f64,
    /// `(pi^4 / q^4) trig_sum(p, q)`.
    pub rhs: f64,
    /// Bound on `|lhs_truncated - rhs|`.
    pub tail_bound: f64,
}

impl BilykIdentity {
    pub fn holds(&self) -> bool {
        (self.lhs_truncated - self.rhs).abs() <= self.tail_bound
    }
}

/// Evaluates both sides for `q >= 2`, `gcd(p, q) = 1` and `K >= q`.
///
/// For a fixed residue `t != 0`, `sum_{k = t mod q} 1/k^2 = pi^2 / (q^2 sin^2(pi t/q))`
/// is at most `C = pi^2 / (q^2 sin^2(pi/q))`, and `sum_{|k| > K} 1/k^2 < 2/K`, so
/// the omitted terms (some `|k_j| > K`) total less than `4C/K`.
pub fn bilyk_identity(p: i64, q: i64, k_max: u64) -> Result<BilykIdentity> {
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "modulus q must be at least 2, got {q}"
        )));
    }
    if k_max < q as u64 {
        return Err(Error::InvalidParameter(format!(
            "truncation K = {k_max} must be at least q = {q}"
        )));
    }
    let rhs_sum = trig_sum(p, q)?;
    let p = p.rem_euclid(q);
    let k = k_max as i64;

    let mut inner = vec![NeumaierSum::new(); q as usize];
    for k1 in (-k..=k).filter(|&k1| k1 != 0) {
        let kf = k1 as f64;
        inner[k1.rem_euclid(q) as usize] += 1.0 / (kf * kf);
    }
    let mut lhs = NeumaierSum::new();
    for k2 in (-k..=k).filter(|&k2| k2.rem_euclid(q) != 0) {
        let t = (-(k2 as i128) * p as i128).rem_euclid(q as i128) as usize;
        let kf = k2 as f64;
        lhs += inner[t].value() / (kf * kf);
    }

    let qf = q as f64;
    let q4 = qf.powi(4);
    let rhs = PI.powi(4) / q4 * rhs_sum;
    let s = (PI / qf).sin();
    let c = PI * PI / (qf * qf * s * s);
    let rounding = 1e-13 * rhs;
    Ok(BilykIdentity {
        lhs_truncated: lhs.value(),
        rhs,
        tail_bound: 4.0 * c / k_max as f64 + rounding,
    })
}
