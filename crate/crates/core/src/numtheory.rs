//! Continued fractions, Fibonacci numbers and the special functions that
//! appear in the lattice formulas.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Partial quotients `a_0..a_n` together with their convergents `p_k / q_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentSequence {
    quotients: Vec<u64>,
    convergents: Vec<(u64, u64)>,
}

impl ConvergentSequence {
    pub fn quotients(&self) -> &[u64] {
        &self.quotients
    }

    pub fn convergents(&self) -> &[(u64, u64)] {
        &self.convergents
    }

    /// The last convergent `(p_n, q_n)`.
    pub fn last(&self) -> (u64, u64) {
        *self.convergents.last().expect("never empty")
    }

    pub fn len(&self) -> usize {
        self.convergents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.convergents.is_empty()
    }
}

/// Runs the three-term recurrence `p_k = a_k p_{k-1} + p_{k-2}` (and the same
/// for `q_k`) from the seeds `(p_{-1}, q_{-1}) = (1, 0)`, `(p_{-2}, q_{-2}) = (0, 1)`.
pub fn convergents(quotients: &[u64]) -> Result<ConvergentSequence> {
    if quotients.is_empty() {
        return Err(Error::EmptyQuotients);
    }
    let mut out = Vec::with_capacity(quotients.len());
    let (mut p_prev2, mut q_prev2) = (0u64, 1u64);
    let (mut p_prev, mut q_prev) = (1u64, 0u64);
    for (index, &a) in quotients.iter().enumerate() {
        if index > 0 && a == 0 {
            return Err(Error::NonPositiveQuotient { index });
        }
        let p = a
            .checked_mul(p_prev)
            .and_then(|v| v.checked_add(p_prev2))
            .ok_or(Error::IntegerOverflow("convergent numerator"))?;
        let q = a
            .checked_mul(q_prev)
            .and_then(|v| v.checked_add(q_prev2))
            .ok_or(Error::IntegerOverflow("convergent denominator"))?;
        out.push((p, q));
        (p_prev2, q_prev2) = (p_prev, q_prev);
        (p_prev, q_prev) = (p, q);
    }
    Ok(ConvergentSequence {
        quotients: quotients.to_vec(),
        convergents: out,
    })
}

/// Fibonacci numbers indexed so that `F_0 = F_1 = 1`.
pub fn fibonacci(n: u32) -> Result<u64> {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 1..n {
        let next = a
            .checked_add(b)
            .ok_or(Error::IntegerOverflow("Fibonacci number"))?;
        a = b;
        b = next;
    }
    Ok(b)
}

/// `1/2 - {x}`.
pub fn rho(x: f64) -> f64 {
    0.5 - (x - x.floor())
}

/// The inhomogeneous Dedekind sum `sum_{k=1}^{q-1} rho(k/q) rho(kp/q)` as an
/// exact rational.
///
/// Each term is an integer over `4q^2`, so the numerator is accumulated in
/// `i128`; this is exact for every `q` a loop over `k` can reach.
pub fn dedekind_sum_exact(p: i64, q: i64) -> Result<Ratio<i128>> {
    if q < 1 {
        return Err(Error::NonPositiveModulus(q));
    }
    let q = q as i128;
    let p = (p as i128).rem_euclid(q);
    let mut numerator: i128 = 0;
    for k in 1..q {
        let a = k;
        let b = (k * p) % q;
        numerator += (q - 2 * a) * (q - 2 * b);
    }
    Ok(Ratio::new(numerator, 4 * q * q))
}

pub fn dedekind_sum(p: i64, q: i64) -> Result<f64> {
    let r = dedekind_sum_exact(p, q)?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

/// The second Bernoulli polynomial `x^2 - x + 1/6` on `[0, 1]`.
pub fn bernoulli2(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::OutOfRange {
            what: "x",
            value: x,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(bernoulli2_unchecked(x))
}

#[inline]
pub(crate) fn bernoulli2_unchecked(x: f64) -> f64 {
    x * x - x + 1.0 / 6.0
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}
