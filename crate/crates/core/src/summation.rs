//! Error-free accumulation for the O(N^2) kernels.

use std::iter::Sum;
use std::ops::{Add, AddAssign};

/// Kahan–Babuška–Neumaier running sum.
#[derive(Debug, Default, Clone, Copy, PartialEq)]
pub struct NeumaierSum {
    s: f64,
    c: f64,
}

impl NeumaierSum {
    pub const fn new() -> Self {
        Self { s: 0.0, c: 0.0 }
    }

    pub fn value(&self) -> f64 {
        self.s + self.c
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let c = if a.abs() >= b.abs() {
        (a - s) + b
    } else {
        (b - s) + a
    };
    (s, c)
}

impl AddAssign<f64> for NeumaierSum {
    #[inline]
    fn add_assign(&mut self, rhs: f64) {
        let (s, c) = two_sum(self.s, rhs);
        self.s = s;
        self.c += c;
    }
}

impl Add<f64> for NeumaierSum {
    type Output = Self;

    fn add(mut self, rhs: f64) -> Self {
        self += rhs;
        self
    }
}

impl Add for NeumaierSum {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (s, c1) = two_sum(self.s, rhs.s);
        Self {
            s,
            c: self.c + rhs.c + c1,
        }
    }
}

impl Sum<f64> for NeumaierSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        iter.fold(NeumaierSum::new(), |acc, x| acc + x)
    }
}

impl Sum for NeumaierSum {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(NeumaierSum::new(), |acc, x| acc + x)
    }
}

/// How pair sums are accumulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Summation {
    Naive,
    #[default]
    Compensated,
}

impl Summation {
    pub fn name(self) -> &'static str {
        match self {
            Summation::Naive => "naive",
            Summation::Compensated => "compensated",
        }
    }
}

/// Either a plain or a compensated accumulator, chosen at run time.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Accumulator {
    Naive(f64),
    Compensated(NeumaierSum),
}

impl Accumulator {
    pub(crate) fn new(mode: Summation) -> Self {
        match mode {
            Summation::Naive => Accumulator::Naive(0.0),
            Summation::Compensated => Accumulator::Compensated(NeumaierSum::new()),
        }
    }

    #[inline]
    pub(crate) fn add(&mut self, x: f64) {
        match self {
            Accumulator::Naive(s) => *s += x,
            Accumulator::Compensated(s) => *s += x,
        }
    }

    pub(crate) fn merge(self, other: Self) -> Self {
        match (self, other) {
            (Accumulator::Naive(a), Accumulator::Naive(b)) => Accumulator::Naive(a + b),
            (Accumulator::Compensated(a), Accumulator::Compensated(b)) => {
                Accumulator::Compensated(a + b)
            }
            (a, b) => Accumulator::Naive(a.value() + b.value()),
        }
    }

    pub(crate) fn value(&self) -> f64 {
        match self {
            Accumulator::Naive(s) => *s,
            Accumulator::Compensated(s) => s.value(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_small_terms_next_to_large_ones() {
        let mut s = NeumaierSum::new();
        s += 1e100;
        s += 1.0;
        s += -1e100;
        assert_eq!(s.value(), 1.0);
    }

    #[test]
    fn merge_keeps_compensation() {
        let a: NeumaierSum = [1e16, 1.0].into_iter().sum();
        let b: NeumaierSum = [-1e16, 1.0].into_iter().sum();
        assert_eq!((a + b).value(), 2.0);
    }

    #[test]
    fn naive_and_compensated_agree_on_exact_sums() {
        let mut n = Accumulator::new(Summation::Naive);
        let mut c = Accumulator::new(Summation::Compensated);
        for i in 0..100 {
            n.add(i as f64 * 0.5);
            c.add(i as f64 * 0.5);
        }
        assert_eq!(n.value(), c.value());
    }
}
