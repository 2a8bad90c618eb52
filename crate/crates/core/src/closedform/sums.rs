//! The ten coordinate sums over the Hammersley set from which its squared
//! discrepancies are assembled, in closed form and by direct summation.
//!
//! With `(x_k, y_k)` the points of the `2^m`-element set:
//! `s1 = sum x`, `s2 = sum x^2`, `s3 = sum x y`, `s4 = sum x y^2`,
//! `s5 = sum x^2 y^2`, `s6 = sum |x_k - x_l|`, `s7 = sum x_k |y_k - y_l|`,
//! `s8 = sum x_k^2 |y_k - y_l|`, `s9 = sum x_k x_l |y_k - y_l|` and
//! `s10 = sum |x_k - x_l| |y_k - y_l|`, double sums over all `k, l`.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{int, pow2, ratio, to_f64};
use crate::error::{Error, Result};

/// Largest `m` accepted by [`direct_hammersley_sums`].
pub const MAX_DIRECT_SUMS_M: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HammersleySums {
    pub m: u32,
    pub s1: BigRational,
    pub s2: BigRational,
    pub s3: BigRational,
    pub s4: BigRational,
    pub s5: BigRational,
    pub s6: BigRational,
    pub s7: BigRational,
    pub s8: BigRational,
    pub s9: BigRational,
    pub s10: BigRational,
}

impl HammersleySums {
    /// The sums in index order `s1..s10`.
    pub fn as_array(&self) -> [&BigRational; 10] {
        [
            &self.s1, &self.s2, &self.s3, &self.s4, &self.s5, &self.s6, &self.s7, &self.s8,
            &self.s9, &self.s10,
        ]
    }

    pub fn to_f64(&self) -> [f64; 10] {
        self.as_array().map(to_f64)
    }

    /// Standard, extreme and periodic squared discrepancies assembled from the
    /// sums by expanding the pair-sum formulas over the Hammersley set.
    pub fn discrepancies(&self) -> [BigRational; 3] {
        let m = i64::from(self.m);
        let n = pow2(m);
        let n2 = pow2(2 * m);
        let (s1, s2, s3, s4, s5) = (&self.s1, &self.s2, &self.s3, &self.s4, &self.s5);
        let (s6, s7, s8, s9, s10) = (&self.s6, &self.s7, &self.s8, &self.s9, &self.s10);
        let quarter = ratio(1, 4);
        let half_n = &n * ratio(1, 2);

        let standard = ratio(11, 18) * &n2 - &half_n * (s5 - int(2) * s2)
            + &quarter
                * (-(pow2(m + 3) * s1) + pow2(m + 1) * s3 + int(2) * s1 * s1 - int(4) * s6
                    + int(4) * s7
                    + s10);
        let extreme = ratio(1, 144) * &n2 - &half_n * (s3 - int(2) * s4 + s5)
            + &quarter
                * (pow2(m + 1) * s3 + int(2) * s1 * s1 - int(8) * s1 * s3 + int(4) * s3 * s3
                    - int(4) * s7
                    + int(4) * s9
                    + s10);
        let periodic = ratio(5, 36) * &n2 - int(4) * s8 + int(4) * s9 - s6 + pow2(m + 1) * s2
            - int(2) * s1 * s1
            + pow2(m + 1) * s5
            - int(8) * s1 * s4
            + int(4) * s3 * s3
            + int(2) * s2 * s2
            + s10;
        [standard, extreme, periodic]
    }
}

/// The ten sums from their closed forms.
pub fn hammersley_sums(m: u32) -> HammersleySums {
    let mm = i64::from(m);
    let n = pow2(mm);
    let one = int(1);
    let n_minus_1 = &n - &one;
    let n2 = pow2(2 * mm);
    let m_r = int(mm);

    let s1 = &n_minus_1 * ratio(1, 2);
    let s2 = &n_minus_1 * (pow2(mm + 1) - &one) / (int(6) * &n);
    let s3 = pow2(mm - 2) + ratio(mm, 8) - ratio(1, 2) + pow2(-(mm + 2));
    let s4 = &n_minus_1 * (pow2(2 * mm + 2) + int(3) * &n * int(mm - 2) + int(2))
        / (int(3) * pow2(2 * mm + 3));
    let inner5 = pow2(2 * mm + 1) - int(3) * &n + &one;
    let s5 = (int(8) * &inner5 * &inner5
        + int(9) * &m_r * &n * (pow2(2 * mm + 2) + &n * int(mm - 9) + int(4)))
        / (int(9) * pow2(3 * mm + 5));
    let s6 = (&n2 - &one) / int(3);
    let s7 = &n_minus_1 * &n_minus_1 * (&n + &one) / (int(6) * &n);
    let s8 = (int(16) * &n_minus_1 * &n_minus_1 * (pow2(2 * mm + 1) + &n - &one)
        + int(9) * &m_r * int(mm - 1) * &n2)
        / (int(9) * pow2(2 * mm + 5));
    let s9 = (int(8)
        * (int(3) * pow2(4 * mm) - &n2 - int(6) * pow2(3 * mm) + int(3) * pow2(mm + 1) - int(2))
        - int(3) * &m_r * &n2 * int(3 * mm + 1))
        / (int(9) * pow2(2 * mm + 5));
    let s10 = (int(8) * (&n2 - &one) + int(9 * mm * mm + 3 * mm)) / int(72);
    HammersleySums {
        m,
        s1,
        s2,
        s3,
        s4,
        s5,
        s6,
        s7,
        s8,
        s9,
        s10,
    }
}

fn bit_reverse(k: u64, m: u32) -> u64 {
    if m == 0 {
        0
    } else {
        k.reverse_bits() >> (64 - m)
    }
}

/// The ten sums by explicit summation over the set, exact in integer arithmetic.
pub fn direct_hammersley_sums(m: u32) -> Result<HammersleySums> {
    direct_sums(m, false)
}

/// Direct sums with the two coordinates swapped, for checking that the x- and
/// y-versions of each sum agree.
pub fn direct_hammersley_sums_mirrored(m: u32) -> Result<HammersleySums> {
    direct_sums(m, true)
}

fn direct_sums(m: u32, mirrored: bool) -> Result<HammersleySums> {
    if m > MAX_DIRECT_SUMS_M {
        return Err(Error::OutOfRange {
            what: "m",
            value: f64::from(m),
            lo: 0.0,
            hi: f64::from(MAX_DIRECT_SUMS_M),
        });
    }
    let n = 1u64 << m;
    // Points are (a_k / n, b_k / n) with integer numerators.
    let (a, b): (Vec<i128>, Vec<i128>) = (0..n)
        .map(|k| {
            let (x, y) = (k as i128, bit_reverse(k, m) as i128);
            if mirrored {
                (y, x)
            } else {
                (x, y)
            }
        })
        .unzip();

    let mut single = [0i128; 5];
    for (&x, &y) in a.iter().zip(&b) {
        single[0] += x;
        single[1] += x * x;
        single[2] += x * y;
        single[3] += x * y * y;
        single[4] += x * x * y * y;
    }
    let mut double = [0i128; 5];
    for k in 0..a.len() {
        for l in 0..a.len() {
            let dx = (a[k] - a[l]).abs();
            let dy = (b[k] - b[l]).abs();
            double[0] += dx;
            double[1] += a[k] * dy;
            double[2] += a[k] * a[k] * dy;
            double[3] += a[k] * a[l] * dy;
            double[4] += dx * dy;
        }
    }
    let scaled = |num: i128, power: i64| {
        BigRational::from_integer(BigInt::from(num)) * pow2(-(i64::from(m) * power))
    };
    Ok(HammersleySums {
        m,
        s1: scaled(single[0], 1),
        s2: scaled(single[1], 2),
        s3: scaled(single[2], 2),
        s4: scaled(single[3], 3),
        s5: scaled(single[4], 4),
        s6: scaled(double[0], 1),
        s7: scaled(double[1], 2),
        s8: scaled(double[2], 3),
        s9: scaled(double[3], 3),
        s10: scaled(double[4], 2),
    })
}
