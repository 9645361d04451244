use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::exact::rational::{int, rat};
use crate::Polynomial;

fn poly_from(xs: &[&[(i64, i64)]]) -> Polytope {
    Polytope::new(
        xs.iter()
            .map(|p| p.iter().map(|&(n, d)| rat(n, d)).collect())
            .collect(),
    )
    .unwrap()
}

fn triangle() -> Polytope {
    poly_from(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]])
}

fn square(lo: i64, hi: i64, den: i64) -> Polytope {
    poly_from(&[
        &[(lo, den), (lo, den)],
        &[(hi, den), (lo, den)],
        &[(lo, den), (hi, den)],
        &[(hi, den), (hi, den)],
    ])
}

fn cube() -> Polytope {
    let mut vs = Vec::new();
    for m in 0..8 {
        vs.push((0..3).map(|i| if m & (1 << i) != 0 { int(1) } else { int(-1) }).collect());
    }
    Polytope::new(vs).unwrap()
}

#[test]
fn documented_counts() {
    assert_eq!(brute_count(&triangle(), &int(2), Membership::Closed).unwrap(), BigInt::from(6));
    assert_eq!(brute_count(&triangle(), &int(3), Membership::Open).unwrap(), BigInt::from(1));
    let interval = poly_from(&[&[(1, 2)], &[(3, 2)]]);
    assert_eq!(brute_count(&interval, &int(1), Membership::Closed).unwrap(), BigInt::from(1));
    assert!(brute_count(&interval, &int(0), Membership::Closed).is_err());
}

#[test]
fn documented_moments() {
    let unit = poly_from(&[&[(0, 1)], &[(1, 1)]]);
    assert_eq!(brute_moment(&unit, &int(2), &[int(1)], 1).unwrap(), int(3));
    assert_eq!(brute_moment(&triangle(), &int(1), &[int(1), int(1)], 2).unwrap(), int(2));
    assert_eq!(brute_moment(&square(-1, 1, 1), &int(1), &[int(3), int(-7)], 1).unwrap(), int(0));
}

#[test]
fn documented_quasipolynomials() {
    let q = interpolated_quasipolynomial(&triangle()).unwrap();
    assert_eq!(q.period(), 1);
    assert_eq!(q.pieces()[0], Polynomial::new(vec![int(1), rat(3, 2), rat(1, 2)]));
    let c = interpolated_quasipolynomial(&cube()).unwrap();
    assert_eq!(c.pieces()[0], Polynomial::new(vec![int(1), int(6), int(12), int(8)]));
    let half = interpolated_quasipolynomial(&square(0, 1, 2)).unwrap();
    assert_eq!(half.period(), 2);
    // even t: (t/2 + 1)^2, odd t: ((t+1)/2)^2
    assert_eq!(half.pieces()[0], Polynomial::new(vec![int(1), int(1), rat(1, 4)]));
    assert_eq!(half.pieces()[1], Polynomial::new(vec![rat(1, 4), rat(1, 2), rat(1, 4)]));
}

#[test]
fn bounding_box_and_guard() {
    let b = DilatedBoundingBox::new(&square(-1, 1, 1), &int(3));
    assert_eq!(b.bounds, vec![(BigInt::from(-3), BigInt::from(3)); 2]);
    assert_eq!(b.candidates(), BigInt::from(49));
    let err = brute_count(&cube(), &int(1000), Membership::Closed).unwrap_err();
    assert!(matches!(err, Error::Resource(_)));
}

#[test]
fn thin_rational_interval_can_be_empty() {
    let interval = poly_from(&[&[(1, 4)], &[(3, 4)]]);
    assert_eq!(brute_count(&interval, &int(1), Membership::Closed).unwrap(), BigInt::from(0));
    assert_eq!(brute_count(&interval, &int(2), Membership::Closed).unwrap(), BigInt::from(1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn interval_matches_floor_ceiling(a in -30i64..30, len in 1i64..30, den in 1i64..8, tn in 1i64..40, td in 1i64..6) {
        let p = poly_from(&[&[(a, den)], &[(a + len, den)]]);
        let t = rat(tn, td);
        let alpha = rat(a, den) * &t;
        let beta = rat(a + len, den) * &t;
        let want = beta.floor().to_integer() - alpha.ceil().to_integer() + 1;
        let want = if want < BigInt::from(0) { BigInt::from(0) } else { want };
        prop_assert_eq!(brute_count(&p, &t, Membership::Closed).unwrap(), want);
    }

    #[test]
    fn closed_dominates_open_and_grows(t in 1i64..6) {
        for p in [triangle(), square(0, 1, 2), cube()] {
            let t1 = int(t);
            let closed = brute_count(&p, &t1, Membership::Closed).unwrap();
            let open = brute_count(&p, &t1, Membership::Open).unwrap();
            prop_assert!(closed >= open);
            let c2 = brute_count(&p, &(int(2) * &t1), Membership::Closed).unwrap();
            let c3 = brute_count(&p, &(int(3) * &t1), Membership::Closed).unwrap();
            prop_assert!(closed <= c2 && c2 <= c3);
        }
    }
}
