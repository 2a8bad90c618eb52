//! Point sets in `[0,1)^d`: generators, geometric and digital shifts, and the
//! plain-text file format.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numtheory::{fibonacci, gcd};

/// Largest `m` accepted by [`hammersley`].
pub const MAX_HAMMERSLEY_M: u32 = 32;

/// Exact coordinates `numerator / denominator` shared by every coordinate of a
/// generated set, kept alongside the floating-point values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCoords {
    pub numerators: Vec<u64>,
    pub denominator: u64,
}

/// An ordered list of `N >= 1` points in `[0,1)^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
    exact: Option<ExactCoords>,
}

impl PointSet {
    /// Builds a set from a flat row-major coordinate buffer.
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        if coords.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        if let Some(&c) = coords.iter().find(|c| !(0.0..1.0).contains(*c)) {
            return Err(Error::OutOfRange {
                what: "coordinate",
                value: c,
                lo: 0.0,
                hi: 1.0,
            });
        }
        Ok(Self {
            dim,
            coords,
            exact: None,
        })
    }

    pub fn from_points<P: AsRef<[f64]>>(points: &[P]) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPointSet)?.as_ref().len();
        let mut coords = Vec::with_capacity(points.len() * dim);
        for p in points {
            let p = p.as_ref();
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            coords.extend_from_slice(p);
        }
        Self::new(dim, coords)
    }

    fn from_exact(dim: usize, numerators: Vec<u64>, denominator: u64) -> Self {
        let scale = denominator as f64;
        let coords = numerators.iter().map(|&n| n as f64 / scale).collect();
        Self {
            dim,
            coords,
            exact: Some(ExactCoords {
                numerators,
                denominator,
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    /// Always false: a point set holds at least one point.
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, k: usize) -> &[f64] {
        &self.coords[k * self.dim..(k + 1) * self.dim]
    }

    pub fn points(&self) -> std::slice::ChunksExact<'_, f64> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn exact(&self) -> Option<&ExactCoords> {
        self.exact.as_ref()
    }

    /// Values of coordinate `axis` across all points, in order.
    pub fn axis(&self, axis: usize) -> Vec<f64> {
        self.points().map(|p| p[axis]).collect()
    }

    /// Serializes to the text format: a `# d=<d> N=<N>` header, then one point
    /// per line with space-separated coordinates. Coordinates are written in
    /// the shortest decimal form that parses back to the same `f64`.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.coords.len() * 20 + 32);
        let _ = writeln!(out, "# d={} N={}", self.dim, self.len());
        for p in self.points() {
            for (i, c) in p.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                let _ = write!(out, "{c}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format written by [`PointSet::to_text`]. Blank lines
    /// and further `#` comment lines are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut coords = Vec::new();
        let mut rows = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if header.is_none() && rows == 0 {
                    header = Some(parse_header(rest, line_no)?);
                }
                continue;
            }
            let (dim, _) = header.ok_or_else(|| Error::Parse {
                line: line_no,
                message: "missing '# d=<d> N=<N>' header".into(),
            })?;
            let before = coords.len();
            for tok in line.split_whitespace() {
                let v: f64 = tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid coordinate '{tok}'"),
                })?;
                coords.push(v);
            }
            if coords.len() - before != dim {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!(
                        "expected {dim} coordinates, found {}",
                        coords.len() - before
                    ),
                });
            }
            rows += 1;
        }
        let (dim, n) = header.ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing '# d=<d> N=<N>' header".into(),
        })?;
        if rows != n {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("header announces N={n} but {rows} points were read"),
            });
        }
        Self::new(dim, coords).map_err(|e| Error::Parse {
            line: 0,
            message: e.to_string(),
        })
    }
}

fn parse_header(rest: &str, line: usize) -> Result<(usize, usize)> {
    let mut dim = None;
    let mut n = None;
    for tok in rest.split_whitespace() {
        let bad = || Error::Parse {
            line,
            message: format!("bad header field '{tok}'"),
        };
        if let Some(v) = tok.strip_prefix("d=") {
            dim = Some(v.parse::<usize>().map_err(|_| bad())?);
        } else if let Some(v) = tok.strip_prefix("N=") {
            n = Some(v.parse::<usize>().map_err(|_| bad())?);
        }
    }
    match (dim, n) {
        (Some(d), Some(n)) => Ok((d, n)),
        _ => Err(Error::Parse {
            line,
            message: "header must contain d=<d> and N=<N>".into(),
        }),
    }
}

/// Base-2 radical inverse of `k`; exact for `k < 2^53`.
pub fn van_der_corput(k: u64) -> f64 {
    let v = k.reverse_bits() as f64 * (-64f64).exp2();
    v.min(1.0 - f64::EPSILON / 2.0)
}

/// Reverses the lowest `m` bits of `k`.
fn reverse_bits(k: u64, m: u32) -> u64 {
    if m == 0 {
        0
    } else {
        k.reverse_bits() >> (64 - m)
    }
}

/// The 2-D Hammersley set `{(k/2^m, phi_2(k)) : k = 0..2^m-1}` in index order.
pub fn hammersley(m: u32) -> Result<PointSet> {
    if m > MAX_HAMMERSLEY_M {
        return Err(Error::IntegerOverflow("2^m Hammersley points"));
    }
    let n = 1u64 << m;
    let mut numerators = Vec::with_capacity(2 * n as usize);
    for k in 0..n {
        numerators.push(k);
        numerators.push(reverse_bits(k, m));
    }
    Ok(PointSet::from_exact(2, numerators, n))
}

/// The rank-1 lattice `{(k/q, {kp/q}) : k = 0..q-1}`.
///
/// `p` is reduced modulo `q`. A non-coprime pair is accepted with a warning;
/// the lattice closed forms reject it.
pub fn rational_lattice(p: i64, q: i64) -> Result<PointSet> {
    if q < 1 {
        return Err(Error::NonPositiveModulus(q));
    }
    let p = p.rem_euclid(q);
    if gcd(p, q) != 1 {
        log::warn!("rational lattice with gcd({p}, {q}) != 1 has repeated rows");
    }
    let (p, q) = (p as u128, q as u128);
    let mut numerators = Vec::with_capacity(2 * q as usize);
    for k in 0..q {
        numerators.push(k as u64);
        numerators.push(((k * p) % q) as u64);
    }
    Ok(PointSet::from_exact(2, numerators, q as u64))
}

/// The Fibonacci lattice with `(p, q) = (F_{n-1}, F_n)`.
pub fn fibonacci_lattice(n: u32) -> Result<PointSet> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "Fibonacci lattice index must be at least 1".into(),
        ));
    }
    let q = fibonacci(n)?;
    let p = fibonacci(n - 1)? % q;
    let q = i64::try_from(q).map_err(|_| Error::IntegerOverflow("Fibonacci modulus"))?;
    rational_lattice(p as i64, q)
}

/// The regular grid `{0, 1/m, ..., (m-1)/m}^d`, first coordinate varying slowest.
pub fn regular_grid(m: u64, d: usize) -> Result<PointSet> {
    if m == 0 || d == 0 {
        return Err(Error::InvalidParameter(
            "grid resolution and dimension must be positive".into(),
        ));
    }
    let n = (0..d).try_fold(1u64, |acc, _| acc.checked_mul(m));
    let n = n
        .filter(|&n| {
            n.checked_mul(d as u64)
                .is_some_and(|t| t <= isize::MAX as u64 / 8)
        })
        .ok_or(Error::IntegerOverflow("m^d grid points"))?;
    let mut numerators = vec![0u64; n as usize * d];
    for idx in 0..n {
        let mut rest = idx;
        for axis in (0..d).rev() {
            numerators[idx as usize * d + axis] = rest % m;
            rest /= m;
        }
    }
    Ok(PointSet::from_exact(d, numerators, m))
}

/// `N` i.i.d. uniform points from a seeded ChaCha8 stream.
pub fn random_pointset(n: usize, d: usize, seed: u64) -> Result<PointSet> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(
            "random point sets need N >= 1 and d >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords = (0..n * d).map(|_| rng.gen::<f64>()).collect();
    PointSet::new(d, coords)
}

/// Torus translation `{x + delta}` applied coordinate-wise.
pub fn geometric_shift(points: &PointSet, delta: &[f64]) -> Result<PointSet> {
    if delta.len() != points.dim {
        return Err(Error::DimensionMismatch {
            expected: points.dim,
            found: delta.len(),
        });
    }
    if let Some(&d) = delta.iter().find(|d| !d.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "shift component {d} is not finite"
        )));
    }
    let coords = points
        .coords
        .chunks_exact(points.dim)
        .flat_map(|p| p.iter().zip(delta).map(|(&c, &d)| wrap_unit(c + d)))
        .collect();
    Ok(PointSet {
        dim: points.dim,
        coords,
        exact: None,
    })
}

#[inline]
fn wrap_unit(x: f64) -> f64 {
    let f = x - x.floor();
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

/// A digital shift of fixed binary precision: per coordinate, `width` digits
/// `delta_1 .. delta_w` with value `sum delta_i 2^-i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicShift {
    width: u32,
    bits: Vec<u64>,
}

impl DyadicShift {
    /// Builds a shift from digit lists, most significant digit first.
    pub fn from_digits<D: AsRef<[u8]>>(digits: &[D]) -> Result<Self> {
        let first = digits
            .first()
            .ok_or_else(|| Error::InvalidParameter("shift needs at least one coordinate".into()))?;
        let width = first.as_ref().len();
        if width == 0 || width > 64 {
            return Err(Error::InvalidParameter(format!(
                "shift precision must be in 1..=64, got {width}"
            )));
        }
        let mut bits = Vec::with_capacity(digits.len());
        for d in digits {
            let d = d.as_ref();
            if d.len() != width {
                return Err(Error::DimensionMismatch {
                    expected: width,
                    found: d.len(),
                });
            }
            let mut v = 0u64;
            for &digit in d {
                if digit > 1 {
                    return Err(Error::InvalidParameter(format!("binary digit {digit}")));
                }
                v = (v << 1) | digit as u64;
            }
            bits.push(v);
        }
        Ok(Self {
            width: width as u32,
            bits,
        })
    }

    /// Builds a shift from integer digit patterns: coordinate `i` has value `bits[i] / 2^width`.
    pub fn from_bits(width: u32, bits: Vec<u64>) -> Result<Self> {
        if width == 0 || width > 64 {
            return Err(Error::InvalidParameter(format!(
                "shift precision must be in 1..=64, got {width}"
            )));
        }
        if bits.is_empty() {
            return Err(Error::InvalidParameter(
                "shift needs at least one coordinate".into(),
            ));
        }
        if width < 64 && bits.iter().any(|&b| b >> width != 0) {
            return Err(Error::InvalidParameter(format!(
                "digit pattern wider than {width} bits"
            )));
        }
        Ok(Self { width, bits })
    }

    pub fn zero(dim: usize, width: u32) -> Result<Self> {
        Self::from_bits(width, vec![0; dim.max(1)])
    }

    pub fn random<R: Rng + ?Sized>(dim: usize, width: u32, rng: &mut R) -> Result<Self> {
        if width == 0 || width > 64 {
            return Err(Error::InvalidParameter(format!(
                "shift precision must be in 1..=64, got {width}"
            )));
        }
        let bits = (0..dim.max(1))
            .map(|_| rng.gen::<u64>() >> (64 - width))
            .collect();
        Ok(Self { width, bits })
    }

    pub fn dim(&self) -> usize {
        self.bits.len()
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn bits(&self) -> &[u64] {
        &self.bits
    }

    /// Digits of coordinate `axis`, most significant first.
    pub fn digits(&self, axis: usize) -> Vec<u8> {
        let b = self.bits[axis];
        (0..self.width)
            .rev()
            .map(|i| ((b >> i) & 1) as u8)
            .collect()
    }

    pub fn value(&self, axis: usize) -> f64 {
        self.bits[axis] as f64 * (-(self.width as f64)).exp2()
    }
}

/// `x ⊕ delta` coordinate-wise: the first `width` binary digits of every
/// coordinate are XOR-ed with the shift digits.
///
/// Every coordinate must be a dyadic rational with at most `width` digits.
/// Results carrying more than 53 significant bits are rounded to the nearest
/// `f64` below one, so the shift is an exact involution only for `width <= 53`.
pub fn digital_shift(points: &PointSet, delta: &DyadicShift) -> Result<PointSet> {
    shift_digits(points, delta, false)
}

/// Like [`digital_shift`], but digits beyond `width` are left unchanged instead
/// of being rejected.
pub fn digital_shift_truncated(points: &PointSet, delta: &DyadicShift) -> Result<PointSet> {
    shift_digits(points, delta, true)
}

fn shift_digits(points: &PointSet, delta: &DyadicShift, keep_tail: bool) -> Result<PointSet> {
    if delta.dim() != points.dim {
        return Err(Error::DimensionMismatch {
            expected: points.dim,
            found: delta.dim(),
        });
    }
    let up = (delta.width as f64).exp2();
    let down = (-(delta.width as f64)).exp2();
    let below_one = 1.0 - f64::EPSILON / 2.0;
    let mut coords = Vec::with_capacity(points.coords.len());
    for p in points.coords.chunks_exact(points.dim) {
        for (axis, &c) in p.iter().enumerate() {
            let scaled = c * up;
            let head = scaled.floor();
            let tail = c - head * down;
            if tail != 0.0 && !keep_tail {
                return Err(Error::InexactDyadicRepresentation {
                    value: c,
                    width: delta.width,
                });
            }
            let shifted = (head as u64) ^ delta.bits[axis];
            let v = shifted as f64 * down + tail;
            coords.push(v.min(below_one));
        }
    }
    Ok(PointSet {
        dim: points.dim,
        coords,
        exact: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pts(ps: &PointSet) -> Vec<Vec<f64>> {
        ps.points().map(|p| p.to_vec()).collect()
    }

    #[test]
    fn van_der_corput_values() {
        assert_eq!(van_der_corput(0), 0.0);
        assert_eq!(van_der_corput(1), 0.5);
        assert_eq!(van_der_corput(6), 0.375);
        assert_eq!(van_der_corput(5), 0.625);
        assert!(van_der_corput(u64::MAX) < 1.0);
    }

    #[test]
    fn hammersley_small_sets() {
        assert_eq!(pts(&hammersley(0).unwrap()), vec![vec![0.0, 0.0]]);
        assert_eq!(
            pts(&hammersley(1).unwrap()),
            vec![vec![0.0, 0.0], vec![0.5, 0.5]]
        );
        assert_eq!(
            pts(&hammersley(2).unwrap()),
            vec![
                vec![0.0, 0.0],
                vec![0.25, 0.5],
                vec![0.5, 0.25],
                vec![0.75, 0.75]
            ]
        );
        assert!(hammersley(MAX_HAMMERSLEY_M + 1).is_err());
    }

    #[test]
    fn hammersley_matches_digit_form() {
        // (t_m/2 + ... + t_1/2^m, t_1/2 + ... + t_m/2^m) over all digit vectors.
        for m in 0..8u32 {
            let mut from_digits: Vec<(f64, f64)> = (0..1u64 << m)
                .map(|t| {
                    let (mut x, mut y) = (0.0, 0.0);
                    for j in 1..=m {
                        let tj = ((t >> (j - 1)) & 1) as f64;
                        x += tj * (-((m + 1 - j) as f64)).exp2();
                        y += tj * (-(j as f64)).exp2();
                    }
                    (x, y)
                })
                .collect();
            let mut generated: Vec<(f64, f64)> = hammersley(m)
                .unwrap()
                .points()
                .map(|p| (p[0], p[1]))
                .collect();
            from_digits.sort_by(|a, b| a.partial_cmp(b).unwrap());
            generated.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert_eq!(from_digits, generated);
        }
    }

    #[test]
    fn hammersley_structure() {
        for m in 0..10u32 {
            let h = hammersley(m).unwrap();
            let n = 1u64 << m;
            for (k, p) in h.points().enumerate() {
                assert_eq!(p[0], k as f64 / n as f64);
                assert_eq!(p[1], van_der_corput(k as u64));
            }
            let mut direct: Vec<(u64, u64)> = h
                .exact()
                .unwrap()
                .numerators
                .chunks(2)
                .map(|c| (c[0], c[1]))
                .collect();
            let mut swapped: Vec<(u64, u64)> = direct.iter().map(|&(a, b)| (b, a)).collect();
            direct.sort();
            swapped.sort();
            assert_eq!(direct, swapped, "diagonal symmetry at m = {m}");
        }
    }

    #[test]
    fn lattice_sets() {
        let l = rational_lattice(3, 5).unwrap();
        let want = [(0, 0), (1, 3), (2, 1), (3, 4), (4, 2)];
        for (p, &(a, b)) in l.points().zip(&want) {
            assert_eq!(p, &[a as f64 / 5.0, b as f64 / 5.0]);
        }
        assert_eq!(pts(&rational_lattice(1, 1).unwrap()), vec![vec![0.0, 0.0]]);
        assert_eq!(
            pts(&rational_lattice(1, 4).unwrap()),
            vec![
                vec![0.0, 0.0],
                vec![0.25, 0.25],
                vec![0.5, 0.5],
                vec![0.75, 0.75]
            ]
        );
        assert_eq!(rational_lattice(-2, 5).unwrap(), l);
        assert_eq!(rational_lattice(1, 0), Err(Error::NonPositiveModulus(0)));
    }

    #[test]
    fn lattice_coordinates_are_multiples_of_one_over_q() {
        for q in 1..40i64 {
            for p in 0..q {
                let l = rational_lattice(p, q).unwrap();
                for &c in l.coords() {
                    let scaled = c * q as f64;
                    assert!((scaled - scaled.round()).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn fibonacci_lattices() {
        assert_eq!(
            fibonacci_lattice(4).unwrap(),
            rational_lattice(3, 5).unwrap()
        );
        assert_eq!(pts(&fibonacci_lattice(1).unwrap()), vec![vec![0.0, 0.0]]);
        let f6 = fibonacci_lattice(6).unwrap();
        assert_eq!(f6.len(), 13);
        for (k, p) in f6.points().enumerate() {
            assert_eq!(p[1], ((k * 8) % 13) as f64 / 13.0);
        }
        assert!(fibonacci_lattice(0).is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(pts(&regular_grid(1, 2).unwrap()), vec![vec![0.0, 0.0]]);
        assert_eq!(
            pts(&regular_grid(2, 1).unwrap()),
            vec![vec![0.0], vec![0.5]]
        );
        let g = regular_grid(3, 2).unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g.point(1), &[0.0, 1.0 / 3.0]);
        assert_eq!(g.point(3), &[1.0 / 3.0, 0.0]);
        assert!(regular_grid(0, 2).is_err());
        assert!(regular_grid(u64::MAX, 3).is_err());
    }

    #[test]
    fn geometric_shift_examples() {
        let h1 = hammersley(1).unwrap();
        assert_eq!(
            pts(&geometric_shift(&h1, &[0.5, 0.5]).unwrap()),
            vec![vec![0.5, 0.5], vec![0.0, 0.0]]
        );
        assert_eq!(pts(&geometric_shift(&h1, &[0.0, 0.0]).unwrap()), pts(&h1));
        let p = PointSet::new(1, vec![0.75]).unwrap();
        assert_eq!(geometric_shift(&p, &[0.5]).unwrap().coords(), &[0.25]);
        assert!(matches!(
            geometric_shift(&h1, &[0.5]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn digital_shift_examples() {
        let h1 = hammersley(1).unwrap();
        let one = DyadicShift::from_digits(&[[1u8], [1u8]]).unwrap();
        assert_eq!(
            pts(&digital_shift(&h1, &one).unwrap()),
            vec![vec![0.5, 0.5], vec![0.0, 0.0]]
        );
        let zero = DyadicShift::zero(2, 64).unwrap();
        assert_eq!(digital_shift(&h1, &zero).unwrap().coords(), h1.coords());
        // 0.11 xor 0.01 = 0.10 and 0.01 xor 0.01 = 0.00.
        let p = PointSet::new(2, vec![0.75, 0.25]).unwrap();
        let d = DyadicShift::from_digits(&[[0u8, 1], [0u8, 1]]).unwrap();
        assert_eq!(digital_shift(&p, &d).unwrap().coords(), &[0.5, 0.0]);
    }

    #[test]
    fn digital_shift_rejects_inexact_coordinates() {
        let p = PointSet::new(1, vec![1.0 / 3.0]).unwrap();
        let d = DyadicShift::zero(1, 8).unwrap();
        assert!(matches!(
            digital_shift(&p, &d),
            Err(Error::InexactDyadicRepresentation { .. })
        ));
        let d = DyadicShift::from_digits(&[[1u8, 0, 0, 0, 0, 0, 0, 0]]).unwrap();
        let t = digital_shift_truncated(&p, &d).unwrap();
        assert!((t.coords()[0] - (1.0 / 3.0 + 0.5)).abs() < 1e-15);
    }

    #[test]
    fn dyadic_shift_accessors() {
        let d = DyadicShift::from_digits(&[[1u8, 0, 1], [0u8, 1, 1]]).unwrap();
        assert_eq!(d.width(), 3);
        assert_eq!(d.digits(0), vec![1, 0, 1]);
        assert_eq!(d.value(1), 0.375);
        assert!(DyadicShift::from_digits(&[[2u8]]).is_err());
        assert!(DyadicShift::from_bits(2, vec![4]).is_err());
        assert!(DyadicShift::from_bits(0, vec![0]).is_err());
    }

    #[test]
    fn random_sets_are_reproducible() {
        let a = random_pointset(100, 2, 42).unwrap();
        let b = random_pointset(100, 2, 42).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_pointset(100, 2, 43).unwrap());
        let one = random_pointset(1, 1, 7).unwrap();
        assert!((0.0..1.0).contains(&one.coords()[0]));
    }

    #[test]
    fn random_set_means_are_near_one_half() {
        // 3 sigma for the mean of 1e4 uniforms: 3 * sqrt(1/12) / 100 < 0.01.
        let p = random_pointset(10_000, 2, 2024).unwrap();
        for axis in 0..2 {
            let mean = p.axis(axis).iter().sum::<f64>() / 10_000.0;
            assert!((mean - 0.5).abs() < 0.02);
        }
    }

    #[test]
    fn text_round_trip() {
        for set in [
            hammersley(5).unwrap(),
            rational_lattice(21, 34).unwrap(),
            random_pointset(50, 3, 1).unwrap(),
        ] {
            let back = PointSet::from_text(&set.to_text()).unwrap();
            assert_eq!(back.coords(), set.coords());
            assert_eq!(back.dim(), set.dim());
        }
        assert_eq!(fibonacci_lattice(1).unwrap().to_text(), "# d=2 N=1\n0 0\n");
    }

    #[test]
    fn text_parse_errors() {
        assert!(PointSet::from_text("0 0\n").is_err());
        assert!(PointSet::from_text("# d=2 N=2\n0 0\n").is_err());
        assert!(PointSet::from_text("# d=2 N=1\n0\n").is_err());
        assert!(PointSet::from_text("# d=2 N=1\n0 x\n").is_err());
        assert!(PointSet::from_text("# d=1 N=1\n1.5\n").is_err());
    }

    #[test]
    fn constructor_validation() {
        assert_eq!(PointSet::new(2, vec![]), Err(Error::EmptyPointSet));
        assert!(PointSet::new(2, vec![0.1, 0.2, 0.3]).is_err());
        assert!(PointSet::new(1, vec![1.0]).is_err());
        assert!(PointSet::new(1, vec![-0.0]).is_ok());
        assert!(PointSet::new(1, vec![f64::NAN]).is_err());
    }

    proptest! {
        #[test]
        fn digital_shift_is_an_involution(
            seed in any::<u64>(),
            m in 0u32..8,
            width in 8u32..=53,
        ) {
            let h = hammersley(m).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let d = DyadicShift::random(2, width, &mut rng).unwrap();
            let once = digital_shift(&h, &d).unwrap();
            let twice = digital_shift(&once, &d).unwrap();
            prop_assert_eq!(twice.coords(), h.coords());
        }

        #[test]
        fn geometric_shift_inverse_returns_to_start(
            seed in any::<u64>(),
            dx in 0.0f64..1.0,
            dy in 0.0f64..1.0,
        ) {
            let p = random_pointset(20, 2, seed).unwrap();
            let there = geometric_shift(&p, &[dx, dy]).unwrap();
            let back = geometric_shift(&there, &[wrap_unit(1.0 - dx), wrap_unit(1.0 - dy)]).unwrap();
            for (a, b) in p.coords().iter().zip(back.coords()) {
                let dist = (a - b).abs();
                prop_assert!(dist.min(1.0 - dist) < 1e-14);
                prop_assert!((0.0..1.0).contains(b));
            }
        }
    }
}
