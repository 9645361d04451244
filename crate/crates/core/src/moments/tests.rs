use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use super::*;
use crate::Polynomial;
use crate::exact::rational::{denominator_lcm, int, rat};

fn cone(apex: &[Rational], rows: &[&[i64]]) -> VertexCone {
    VertexCone::new(
        apex.to_vec(),
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
    )
    .unwrap()
}

fn fig1() -> VertexCone {
    cone(&[rat(-1, 2), rat(-1, 4)], &[&[4, 1], &[2, 3]])
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

#[test]
fn unit_cell_has_one_point() {
    let c = cone(&ints(&[2, -1]), &[&[1, 0], &[0, 1]]);
    for t in [int(1), int(3), rat(1, 2)] {
        let got = discrete_moment(&c, &t, &ints(&[3, 7]), 0, Orientation::Closed).unwrap();
        assert_eq!(got, int(1));
    }
}

#[test]
fn interval_first_moment_is_ceiling_gap() {
    for (alpha, t) in [(rat(1, 3), rat(5, 2)), (rat(-7, 4), rat(2, 3)), (int(2), rat(1, 5))] {
        let c = cone(std::slice::from_ref(&alpha), &[&[1]]);
        let x = &t * &alpha;
        let want = x.ceil() - &x;
        assert_eq!(discrete_moment(&c, &t, &ints(&[1]), 1, Orientation::Closed).unwrap(), want);
    }
}

#[test]
fn rational_cone_volume_moment() {
    for t in [rat(1, 7), int(1), rat(13, 4)] {
        let req = MomentRequest {
            cone: &fig1(),
            t,
            z: ints(&[1, -3]),
            n: 0,
            orientation: Orientation::Closed,
        };
        assert_eq!(req.evaluate().unwrap(), int(10));
    }
}

#[test]
fn orthogonal_direction_is_rejected() {
    let c = cone(&ints(&[0, 0]), &[&[1, 1], &[0, 1]]);
    let err = discrete_moment(&c, &int(1), &ints(&[1, -1]), 2, Orientation::Closed).unwrap_err();
    assert!(matches!(err, Error::Genericity(_)));
    assert!(matches!(
        discrete_moment(&c, &int(1), &ints(&[1]), 2, Orientation::Closed),
        Err(Error::Input(_))
    ));
}

#[test]
fn flow_at_time_zero_is_the_cell() {
    let c = fig1();
    let cell: Vec<Vec<Rational>> = c
        .enumerate_shifted_parallelepiped(&ints(&[0, 0]))
        .iter()
        .map(|p| crate::geometry::vector::to_rational(p))
        .collect();
    assert_eq!(lattice_flow_points(&c, &int(0)), cell);
    assert_eq!(lattice_flow_points(&c, &int(4)), cell);
    assert_ne!(lattice_flow_points(&c, &int(1)), cell);
    let integral = cone(&ints(&[3, 1]), &[&[1, 2], &[1, -1]]);
    let base = lattice_flow_points(&integral, &int(0));
    for t in 1..5 {
        assert_eq!(lattice_flow_points(&integral, &int(t)), base);
    }
}

#[test]
fn tracks_follow_each_cell_point() {
    let c = fig1();
    let at0 = lattice_flow_tracks(&c, &int(0));
    let later = lattice_flow_tracks(&c, &rat(1, 8));
    assert_eq!(at0.len(), 10);
    for (p, q) in at0.iter().zip(&later) {
        let moved: Vec<Rational> = p.iter().zip(c.apex()).map(|(a, v)| a - v * rat(1, 8)).collect();
        assert_eq!(c.reduce_mod_lattice(&moved), *q);
    }
}

#[test]
fn rational_triangle_has_two_geodesics() {
    let orbits = flow_orbits(&fig1());
    assert_eq!(orbits.len(), 2);
    for o in &orbits {
        assert_eq!(o.len(), 5);
        assert_eq!(o.period(), 20);
    }
}

#[test]
fn trivial_orbits() {
    let unit = flow_orbits(&cone(&ints(&[1, 1]), &[&[1, 0], &[0, 1]]));
    assert_eq!(unit.len(), 1);
    assert_eq!((unit[0].len(), unit[0].period()), (1, 1));
    let third = flow_orbits(&cone(&[rat(1, 3)], &[&[1]]));
    assert_eq!(third.len(), 1);
    assert_eq!((third[0].len(), third[0].period()), (1, 3));
    assert!(!third[0].is_empty());
}

#[test]
fn origin_apex_gives_one_piece() {
    let c = cone(&ints(&[0, 0]), &[&[1, 0], &[1, 2]]);
    let pw = piecewise_moment(&c, &ints(&[2, 5]), 0, &int(0), &int(2)).unwrap();
    assert_eq!(pw.breakpoints(), &[int(0), int(2)]);
    assert_eq!(pw.open_pieces()[0], Polynomial::constant(int(2)));
}

#[test]
fn half_apex_interval_breaks_at_even_times() {
    let c = cone(&[rat(1, 2)], &[&[1]]);
    let pw = piecewise_moment(&c, &ints(&[1]), 1, &int(0), &int(5)).unwrap();
    assert_eq!(pw.breakpoints(), &[int(0), int(2), int(4), int(5)]);
    for k in 1..=100 {
        let t = rat(k, 20);
        let want = discrete_moment(&c, &t, &ints(&[1]), 1, Orientation::Closed).unwrap();
        assert_eq!(pw.eval(&t), Some(want));
    }
    assert_eq!(pw.eval(&int(0)), None);
    assert!(piecewise_moment(&c, &ints(&[1]), 1, &int(2), &int(1)).is_err());
}

#[test]
fn zeroth_moment_pieces_are_constant() {
    let c = fig1();
    let pw = piecewise_moment(&c, &ints(&[1, 1]), 0, &rat(1, 2), &rat(7, 2)).unwrap();
    assert!(pw.breakpoints().len() > 2);
    for p in pw.open_pieces().iter().chain(pw.point_pieces()) {
        assert_eq!(p, &Polynomial::constant(int(10)));
    }
}

fn rational_cone_2d() -> impl Strategy<Value = VertexCone> {
    (
        prop::collection::vec(-5i64..6, 2),
        prop::collection::vec(-5i64..6, 2),
        prop::collection::vec(-6i64..7, 2),
        1i64..7,
    )
        .prop_filter_map("nonsingular", |(a, b, v, den)| {
            let det = a[0] * b[1] - a[1] * b[0];
            (det != 0 && det.abs() <= 20).then(|| {
                cone(&[rat(v[0], den), rat(v[1], den)], &[&a, &b])
            })
        })
}

fn generic_z(c: &VertexCone) -> impl Strategy<Value = Vec<Rational>> {
    let c = c.clone();
    prop::collection::vec(-9i64..10, 2)
        .prop_map(|v| ints(&v))
        .prop_filter("generic", move |z| check_generic(&c, z).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn zeroth_moment_is_volume(
        (c, z) in rational_cone_2d().prop_flat_map(|c| (Just(c.clone()), generic_z(&c))),
        tn in 1i64..40, td in 1i64..9, open in any::<bool>(),
    ) {
        let o = if open { Orientation::Open } else { Orientation::Closed };
        let mu = discrete_moment(&c, &rat(tn, td), &z, 0, o).unwrap();
        prop_assert_eq!(mu, Rational::from_integer(c.volume().clone()));
    }

    #[test]
    fn integer_time_periodicity(
        (c, z) in rational_cone_2d().prop_flat_map(|c| (Just(c.clone()), generic_z(&c))),
        t in 1i64..12, n in 0usize..4,
    ) {
        let period = denominator_lcm(c.apex().iter());
        let later = int(t) + Rational::from_integer(period);
        prop_assert_eq!(
            discrete_moment(&c, &int(t), &z, n, Orientation::Closed).unwrap(),
            discrete_moment(&c, &later, &z, n, Orientation::Closed).unwrap()
        );
    }

    #[test]
    fn orbits_partition_the_cell(c in rational_cone_2d()) {
        let orbits = flow_orbits(&c);
        let total: usize = orbits.iter().map(FlowOrbit::len).sum();
        prop_assert_eq!(BigInt::from(total), c.volume().clone());
        prop_assert!(orbits.iter().all(|o| o.len() == orbits[0].len()));
        prop_assert!(orbits.iter().all(|o| o.period() == orbits[0].period()));
    }

    #[test]
    fn piecewise_matches_pointwise(
        (c, z) in rational_cone_2d().prop_flat_map(|c| (Just(c.clone()), generic_z(&c))),
        n in 0usize..4, samples in prop::collection::vec((0i64..25, 1i64..25), 25),
    ) {
        let (lo, hi) = (rat(1, 3), rat(3, 2));
        let pw = piecewise_moment(&c, &z, n, &lo, &hi).unwrap();
        let bps = pw.breakpoints().to_vec();
        for w in bps.windows(2) {
            for (a, b) in &samples {
                // a point strictly inside (w0, w1) plus the right endpoint
                let s = rat(*a + 1, *a + *b + 2);
                let t = &w[0] + (&w[1] - &w[0]) * s;
                let want = discrete_moment(&c, &t, &z, n, Orientation::Closed).unwrap();
                prop_assert_eq!(pw.eval(&t), Some(want));
            }
            let want = discrete_moment(&c, &w[1], &z, n, Orientation::Closed).unwrap();
            prop_assert_eq!(pw.eval(&w[1]), Some(want));
        }
    }

    #[test]
    fn open_flow_is_reflected_closed_flow(
        (c, z) in rational_cone_2d().prop_flat_map(|c| (Just(c.clone()), generic_z(&c))),
        tn in 1i64..30, td in 1i64..7,
    ) {
        let t = rat(tn, td);
        let reflected = VertexCone::new(
            c.apex().iter().map(|x| -x).collect(),
            c.edges().to_vec(),
        ).unwrap();
        let tv: Vec<Rational> = c.apex().iter().map(|x| x * &t).collect();
        let minus: Vec<Rational> = tv.iter().map(|x| -x).collect();
        prop_assert_eq!(
            c.enumerate_shifted_parallelepiped(&minus),
            reflected.enumerate_shifted_parallelepiped(&minus)
        );
        let mut a = flow_values(&c, &t, &z, Orientation::Open);
        let mut b = flow_values(&reflected, &t, &z, Orientation::Closed);
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert!(!t.is_zero() && !t.is_negative());
    }
}
