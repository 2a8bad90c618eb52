//! Squared discrepancies of the rational lattice `{(k/q, {kp/q})}`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numtheory::{dedekind_sum, gcd};
use crate::summation::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeClosedForm {
    pub p: i64,
    pub q: i64,
    /// `sum_{r=1}^{q-1} 1 / (sin^2(pi r/q) sin^2(pi r p/q))`.
    pub trig_sum: f64,
    /// As `trig_sum` with numerator `1 + 2 cos^2(pi r p/q)`.
    pub cos_trig_sum: f64,
    pub dedekind: f64,
    pub standard_sq: f64,
    pub extreme_sq: f64,
    pub periodic_sq: f64,
}

fn check_coprime(p: i64, q: i64) -> Result<i64> {
    if q < 1 {
        return Err(Error::NonPositiveModulus(q));
    }
    let g = gcd(p, q);
    if g != 1 {
        return Err(Error::NonCoprime { p, q, gcd: g });
    }
    Ok(p.rem_euclid(q))
}

/// `sin(pi r/q)^2` and `cos(pi r/q)^2` from the argument folded into `[0, pi/2]`.
fn sin_cos_sq(r: i64, q: i64) -> (f64, f64) {
    let r = r.rem_euclid(q);
    let r = r.min(q - r);
    let angle = PI * r as f64 / q as f64;
    let (s, c) = angle.sin_cos();
    (s * s, c * c)
}

fn lattice_sums(p: i64, q: i64) -> (f64, f64) {
    let mut plain = NeumaierSum::new();
    let mut with_cos = NeumaierSum::new();
    for r in 1..q {
        let (s1, _) = sin_cos_sq(r, q);
        let rp = ((r as i128 * p as i128) % q as i128) as i64;
        let (s2, c2) = sin_cos_sq(rp, q);
        let base = 1.0 / (s1 * s2);
        plain += base;
        with_cos += (1.0 + 2.0 * c2) * base;
    }
    (plain.value(), with_cos.value())
}

pub fn trig_sum(p: i64, q: i64) -> Result<f64> {
    let p = check_coprime(p, q)?;
    Ok(lattice_sums(p, q).0)
}

pub fn cos_trig_sum(p: i64, q: i64) -> Result<f64> {
    let p = check_coprime(p, q)?;
    Ok(lattice_sums(p, q).1)
}

/// All three squared discrepancies of the `q`-point lattice with generator `p`.
pub fn lattice_closed_form(p: i64, q: i64) -> Result<LatticeClosedForm> {
    let p_red = check_coprime(p, q)?;
    let (trig, cos_trig) = lattice_sums(p_red, q);
    let dedekind = dedekind_sum(p_red, q)?;
    let q2 = (q as f64) * (q as f64);
    let shifted = dedekind + 0.75;
    Ok(LatticeClosedForm {
        p,
        q,
        trig_sum: trig,
        cos_trig_sum: cos_trig,
        dedekind,
        standard_sq: cos_trig / (16.0 * q2) + shifted * shifted + 1.0 / 18.0 - 1.0 / (144.0 * q2),
        extreme_sq: trig / (16.0 * q2) + 1.0 / 72.0 - 1.0 / (144.0 * q2),
        periodic_sq: trig / (4.0 * q2) + 1.0 / 9.0 + 1.0 / (36.0 * q2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_lattice() {
        let f = lattice_closed_form(3, 5).unwrap();
        assert!((f.trig_sum - 64.0 / 5.0).abs() < 1e-12);
        assert!((f.cos_trig_sum - 112.0 / 5.0).abs() < 1e-12);
        assert_eq!(f.dedekind, 0.0);
        assert!((f.extreme_sq - 821.0 / 18000.0).abs() < 1e-15);
        assert!((f.periodic_sq - 1081.0 / 4500.0).abs() < 1e-15);
        assert!((f.standard_sq - 0.673778).abs() < 1e-6);
    }

    #[test]
    fn single_point_lattice() {
        let f = lattice_closed_form(1, 1).unwrap();
        assert_eq!(f.trig_sum, 0.0);
        assert_eq!(f.cos_trig_sum, 0.0);
        assert!((f.extreme_sq - 1.0 / 144.0).abs() < 1e-16);
        assert!((f.periodic_sq - 5.0 / 36.0).abs() < 1e-16);
        assert!((f.standard_sq - 11.0 / 18.0).abs() < 1e-15);
    }

    #[test]
    fn generator_is_reduced_mod_q() {
        let a = lattice_closed_form(8, 5).unwrap();
        let b = lattice_closed_form(3, 5).unwrap();
        assert_eq!(a.trig_sum, b.trig_sum);
        assert_eq!(a.standard_sq, b.standard_sq);
    }

    #[test]
    fn argument_folding_is_symmetric() {
        for q in 2..40 {
            for r in 1..q {
                assert_eq!(sin_cos_sq(r, q), sin_cos_sq(q - r, q));
            }
        }
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(
            lattice_closed_form(2, 4),
            Err(Error::NonCoprime { p: 2, q: 4, gcd: 2 })
        );
        assert!(trig_sum(3, 0).is_err());
        assert!(cos_trig_sum(0, 6).is_err());
    }
}
