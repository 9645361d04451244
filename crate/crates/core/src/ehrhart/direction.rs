use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geometry::vector::{dot_int, to_rational};
use crate::geometry::Polytope;
use crate::Rational;

/// Integer direction `z` with `<z, w> != 0` for every edge vector `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericDirection {
    #[serde(serialize_with = "ser_ints")]
    pub z: Vec<BigInt>,
    pub seed: u64,
}

fn ser_ints<S: serde::Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

impl GenericDirection {
    pub fn rational(&self) -> Vec<Rational> {
        to_rational(&self.z)
    }
}

/// Seeded draw from `[-R, R]^d`, `R = 10 d N`, retried until generic.
pub fn pick_generic_z(polytope: &Polytope, seed: u64) -> GenericDirection {
    let d = polytope.dimension();
    let r = (10 * d * polytope.vertices().len()) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let z: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect();
        if polytope.edge_directions().all(|w| !dot_int(w, &z).is_zero()) {
            return GenericDirection { z, seed };
        }
    }
}
