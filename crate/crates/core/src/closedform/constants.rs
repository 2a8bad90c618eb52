//! Limits attached to the Fibonacci lattice.

/// `4 / (15 sqrt 5)`, the growth rate of `trig_sum(F_{n-1}, F_n) / (n F_n^2)`.
pub fn fibonacci_slope_constant() -> f64 {
    4.0 / (15.0 * 5f64.sqrt())
}

/// `sqrt(1 / (60 sqrt 5 ln phi))` with `phi` the golden ratio.
pub fn eta_constant() -> f64 {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    (1.0 / (60.0 * 5f64.sqrt() * phi.ln())).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert!((fibonacci_slope_constant() - 0.1192569588).abs() < 1e-10);
        assert!((eta_constant() - 0.124455).abs() < 1e-6);
        assert!((2.0 * eta_constant() - 0.248910).abs() < 1e-6);
    }
}
