//! Reference polytopes: the worked examples plus seeded random families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::rational::{int, rat};
use crate::geometry::{Polytope, RationalVector};
use crate::Rational;

fn build(vertices: Vec<RationalVector>) -> Polytope {
    Polytope::new(vertices).expect("corpus polytope is simple")
}

fn ints(rows: &[&[i64]]) -> Polytope {
    build(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
}

pub fn interval(lo: Rational, hi: Rational) -> Polytope {
    build(vec![vec![lo], vec![hi]])
}

/// `conv{0, e_1, ..., e_d}`.
pub fn standard_simplex(d: usize) -> Polytope {
    let mut vs = vec![vec![int(0); d]];
    for i in 0..d {
        let mut v = vec![int(0); d];
        v[i] = int(1);
        vs.push(v);
    }
    build(vs)
}

pub fn standard_triangle() -> Polytope {
    standard_simplex(2)
}

/// `[lo, hi]^d`.
pub fn cube(d: usize, lo: Rational, hi: Rational) -> Polytope {
    let vs = (0..1u32 << d)
        .map(|m| {
            (0..d)
                .map(|i| if m & (1 << i) != 0 { hi.clone() } else { lo.clone() })
                .collect()
        })
        .collect();
    build(vs)
}

/// `[-1, 1]^d`.
pub fn symmetric_cube(d: usize) -> Polytope {
    cube(d, int(-1), int(1))
}

/// `[0, 1]^d`.
pub fn unit_cube(d: usize) -> Polytope {
    cube(d, int(0), int(1))
}

/// Triangle with the rational vertex `(-1/2, -1/4)` whose cone has
/// edges `(4, 1)`, `(2, 3)`.
pub fn rational_triangle() -> Polytope {
    build(vec![
        vec![rat(-1, 2), rat(-1, 4)],
        vec![rat(7, 2), rat(3, 4)],
        vec![rat(3, 2), rat(11, 4)],
    ])
}

/// `conv{(0,0), (1,0), (1,2)}`, with a determinant-2 vertex.
pub fn skew_triangle() -> Polytope {
    ints(&[&[0, 0], &[1, 0], &[1, 2]])
}

/// `[0, 1/2]^2`, period 2.
pub fn half_square() -> Polytope {
    cube(2, int(0), rat(1, 2))
}

/// `conv{(0,0), (2,0), (0,2)}`.
pub fn double_triangle() -> Polytope {
    ints(&[&[0, 0], &[2, 0], &[0, 2]])
}

/// Smooth hexagon `conv{(1,0),(2,0),(2,1),(1,2),(0,2),(0,1)}`.
pub fn smooth_hexagon() -> Polytope {
    ints(&[&[1, 0], &[2, 0], &[2, 1], &[1, 2], &[0, 2], &[0, 1]])
}

/// `conv{0, (1/2,0,0), (0,1/3,0), (0,0,1)}`, period 6.
pub fn rational_simplex() -> Polytope {
    build(vec![
        vec![int(0), int(0), int(0)],
        vec![rat(1, 2), int(0), int(0)],
        vec![int(0), rat(1, 3), int(0)],
        vec![int(0), int(0), int(1)],
    ])
}

/// Triangular prism `conv{(0,0),(2,0),(0,1)} x [0,1]`.
pub fn prism() -> Polytope {
    ints(&[
        &[0, 0, 0],
        &[2, 0, 0],
        &[0, 1, 0],
        &[0, 0, 1],
        &[2, 0, 1],
        &[0, 1, 1],
    ])
}

fn cross(o: &[i64; 2], a: &[i64; 2], b: &[i64; 2]) -> i64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Convex hull (counter-clockwise, collinear points dropped).
pub fn convex_hull(points: &[[i64; 2]]) -> Vec<[i64; 2]> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<[i64; 2]> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(*p);
    }
    let mut upper: Vec<[i64; 2]> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(*p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Random integer polygon: hull of 3..=8 points in `[0, max]^2`, at most
/// 8 vertices. Returns the hull in counter-clockwise order.
pub fn random_integer_polygon(seed: u64, max: i64) -> Vec<[i64; 2]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.gen_range(3..=8);
        let pts: Vec<[i64; 2]> = (0..n)
            .map(|_| [rng.gen_range(0..=max), rng.gen_range(0..=max)])
            .collect();
        let hull = convex_hull(&pts);
        if hull.len() >= 3 {
            return hull;
        }
    }
}

pub fn polygon(hull: &[[i64; 2]]) -> Polytope {
    build(hull.iter().map(|p| vec![int(p[0]), int(p[1])]).collect())
}

/// Random interval with rational endpoints, `lo < hi`.
pub fn random_rational_interval(seed: u64) -> (Rational, Rational) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q1 = rng.gen_range(1..=12);
    let q2 = rng.gen_range(1..=12);
    let lo = rat(rng.gen_range(-60..=60), q1);
    let hi = &lo + rat(rng.gen_range(1..=60), q2);
    (lo, hi)
}

/// The named corpus, `d <= 3`.
pub fn named() -> Vec<(&'static str, Polytope)> {
    vec![
        ("unit_interval", interval(int(0), int(1))),
        ("half_shifted_interval", interval(rat(1, 2), rat(3, 2))),
        ("thin_interval", interval(rat(1, 4), rat(3, 4))),
        ("rational_interval", interval(rat(-2, 3), rat(3, 2))),
        ("standard_triangle", standard_triangle()),
        ("unit_square", unit_cube(2)),
        ("symmetric_square", symmetric_cube(2)),
        ("rational_triangle", rational_triangle()),
        ("skew_triangle", skew_triangle()),
        ("half_square", half_square()),
        ("double_triangle", double_triangle()),
        ("smooth_hexagon", smooth_hexagon()),
        ("unit_cube", unit_cube(3)),
        ("symmetric_cube", symmetric_cube(3)),
        ("standard_simplex", standard_simplex(3)),
        ("rational_simplex", rational_simplex()),
        ("prism", prism()),
    ]
}
