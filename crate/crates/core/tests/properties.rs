use l2disc::closedform::{
    hammersley_extreme_sq, hammersley_periodic_sq, hammersley_standard_sq, lattice_closed_form,
};
use l2disc::discrepancy::*;
use l2disc::pointset::*;
use proptest::prelude::*;

fn point_set(
    max_n: usize,
    dims: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = PointSet> {
    dims.prop_flat_map(move |d| {
        proptest::collection::vec(0.0f64..1.0, d..=d * max_n).prop_map(move |mut c| {
            c.truncate(c.len() / d * d);
            PointSet::new(d, c).unwrap()
        })
    })
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-300)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extreme_is_smallest(p in point_set(64, 1..=3)) {
        let std = l2_standard_sq(&p).unwrap();
        let extr = l2_extreme_sq(&p).unwrap();
        let per = l2_periodic_sq(&p).unwrap();
        prop_assert!(extr <= std + 1e-12);
        prop_assert!(extr <= per + 1e-12);
    }

    #[test]
    fn one_dimensional_identities(p in point_set(64, 1..=1)) {
        let std = l2_standard_sq(&p).unwrap();
        let extr = l2_extreme_sq(&p).unwrap();
        let per = l2_periodic_sq(&p).unwrap();
        prop_assert!(rel(per, 2.0 * extr) < 1e-12);
        prop_assert!(per <= 2.0 * std + 1e-12);
        prop_assert!(rel(l2_extreme_sq_1d(&p).unwrap(), extr) < 1e-12);
        prop_assert!(rel(l2_periodic_sq_1d(&p).unwrap(), per) < 1e-12);
    }

    #[test]
    fn permutation_invariance(p in point_set(40, 1..=3), seed in any::<u64>()) {
        let d = p.dim();
        let mut rows: Vec<Vec<f64>> = p.points().map(<[f64]>::to_vec).collect();
        let n = rows.len();
        for i in (1..n).rev() {
            rows.swap(i, (seed.wrapping_mul(i as u64 + 7) % (i as u64 + 1)) as usize);
        }
        let q = PointSet::new(d, rows.concat()).unwrap();
        for kind in DiscrepancyKind::ALL {
            let a = l2_sq(&p, kind).unwrap();
            let b = l2_sq(&q, kind).unwrap();
            prop_assert!((a - b).abs() <= 1e-12 * a.max(1.0));
        }
    }

    #[test]
    fn torus_invariance(p in point_set(40, 1..=3), delta in proptest::collection::vec(0.0f64..1.0, 3)) {
        let shifted = geometric_shift(&p, &delta[..p.dim()]).unwrap();
        let a = l2_periodic_sq(&p).unwrap();
        let b = l2_periodic_sq(&shifted).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.max(1.0));
    }

    #[test]
    fn cell_exact_is_an_oracle(p in point_set(8, 1..=2)) {
        for kind in DiscrepancyKind::ALL {
            let a = cell_exact_sq(&p, kind).unwrap();
            let b = l2_sq(&p, kind).unwrap();
            prop_assert!(rel(a, b) < 1e-10, "{kind}: {a} vs {b}");
        }
    }

    #[test]
    fn spectral_series_brackets(p in point_set(12, 1..=2), k in 1u64..40) {
        let est = diaphony_truncated(&p, k).unwrap();
        prop_assert!(est.contains(l2_periodic_sq(&p).unwrap()), "{est:?}");
    }
}

#[test]
fn hammersley_sets_match_closed_forms() {
    for m in 0..=10 {
        let h = hammersley(m).unwrap();
        let r = DiscrepancyReport::pair_sum(&h, Summation::Compensated).unwrap();
        assert!(rel(r.standard_sq.unwrap(), hammersley_standard_sq(m)) < 1e-9);
        assert!(rel(r.extreme_sq.unwrap(), hammersley_extreme_sq(m)) < 1e-9);
        assert!(rel(r.periodic_sq.unwrap(), hammersley_periodic_sq(m)) < 1e-9);
    }
}

#[test]
fn digital_shift_round_trip_on_hammersley() {
    let h = hammersley(3).unwrap();
    let delta = DyadicShift::from_bits(3, vec![5, 2]).unwrap();
    let shifted = digital_shift(&h, &delta).unwrap();
    assert_ne!(shifted.coords(), h.coords());
    assert_eq!(
        digital_shift(&shifted, &delta).unwrap().coords(),
        h.coords()
    );
    // An m-digit shift permutes each coordinate of the m-bit grid, so the
    // one-dimensional projections and hence their sums are unchanged.
    for axis in 0..2 {
        let mut a = h.axis(axis);
        let mut b = shifted.axis(axis);
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        assert_eq!(a, b);
    }
}

#[test]
fn fibonacci_lattices_match_closed_forms() {
    for n in 1..=14 {
        let set = fibonacci_lattice(n).unwrap();
        let q = set.len() as i64;
        let p = if q == 1 {
            0
        } else {
            (set.point(1)[1] * q as f64).round() as i64
        };
        let f = lattice_closed_form(p, q).unwrap();
        assert!(
            rel(l2_standard_sq(&set).unwrap(), f.standard_sq) < 1e-9,
            "n = {n}"
        );
        assert!(
            rel(l2_extreme_sq(&set).unwrap(), f.extreme_sq) < 1e-9,
            "n = {n}"
        );
        assert!(
            rel(l2_periodic_sq(&set).unwrap(), f.periodic_sq) < 1e-9,
            "n = {n}"
        );
    }
}

#[test]
fn text_round_trip_preserves_values() {
    for set in [
        hammersley(6).unwrap(),
        rational_lattice(21, 34).unwrap(),
        random_pointset(30, 3, 1).unwrap(),
    ] {
        let back = PointSet::from_text(&set.to_text()).unwrap();
        assert_eq!(back.coords(), set.coords());
        for kind in DiscrepancyKind::ALL {
            assert_eq!(l2_sq(&back, kind).unwrap(), l2_sq(&set, kind).unwrap());
        }
    }
}
