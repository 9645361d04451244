//! The complete identity suite for one polytope, including cross-checks of
//! every formula path against the brute-force oracle.

use num_traits::{One, Zero};

use crate::ehrhart::{
    constant_term_identity, hypercube_barnes_identity, is_hollow, is_smooth, ode_check, pick_generic_z,
    smooth_identities, special_case_identities, vanishing_identities, z_independence_check, Engine,
    IdentityReport, Params,
};
use crate::error::{Error, Result};
use crate::exact::rational::{format_rational, int};
use crate::geometry::{Membership, Polytope};
use crate::oracle::{brute_count, brute_moment, interpolated_quasipolynomial};
use crate::{Rational, RationalQuasiPolynomial};

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Dilations at which the pointwise identities are evaluated.
    pub ts: Vec<Rational>,
    /// Seeds of the generic directions; at least one.
    pub seeds: Vec<u64>,
    /// Highest moment order compared with the oracle.
    pub max_moment: usize,
    pub threads: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            ts: vec![int(1), Rational::new(7.into(), 3.into())],
            seeds: vec![1, 2, 3],
            max_moment: 3,
            threads: 1,
        }
    }
}

fn show_quasi(q: &RationalQuasiPolynomial) -> String {
    q.pieces()
        .iter()
        .map(|p| p.coefficients().iter().map(format_rational).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" | ")
}

/// Runs every applicable identity and oracle comparison on `polytope`.
pub fn verify_polytope(polytope: &Polytope, config: &VerifyConfig) -> Result<Vec<IdentityReport>> {
    if config.seeds.is_empty() {
        return Err(Error::Input("need at least one seed".into()));
    }
    if let Some(t) = config.ts.iter().find(|t| !(*t > &Rational::zero())) {
        return Err(Error::Input(format!("dilation t = {t} must be positive")));
    }
    let engine = Engine::new(config.threads);
    let d = polytope.dimension();
    let integral = polytope.is_integral();
    let smooth = is_smooth(polytope);
    let mut out = Vec::new();

    for &seed in &config.seeds {
        let z = pick_generic_z(polytope, seed).rational();
        for t in &config.ts {
            out.extend(vanishing_identities(polytope, t, &z)?);
            let closed = Rational::from_integer(brute_count(polytope, t, Membership::Closed)?);
            let open = Rational::from_integer(brute_count(polytope, t, Membership::Open)?);
            let p = || Params::new().with("t", t).z(&z);
            out.push(IdentityReport::exact("count_matches_oracle", p(), &engine.count(polytope, t, &z)?, &closed));
            out.push(IdentityReport::exact("open_count_matches_oracle", p(), &engine.open_count(polytope, t, &z)?, &open));
            for m in 1..=config.max_moment {
                out.push(IdentityReport::exact(
                    "moment_matches_oracle",
                    p().with("m", m),
                    &engine.polytope_moment(polytope, m, t, &z)?,
                    &brute_moment(polytope, t, &z, m)?,
                ));
            }
        }
        out.extend(special_case_identities(polytope, &z)?);
        if integral {
            out.push(constant_term_identity(polytope, &z)?);
        }
        if smooth {
            out.extend(smooth_identities(polytope, &z)?);
        }
        if d <= 3 {
            for j in 0..=d {
                out.push(hypercube_barnes_identity(d, j, &z)?);
            }
        }
        let hi = config.ts.iter().max().cloned().unwrap_or_else(Rational::one);
        let max_m = if d <= 2 { 2 } else { 1 };
        for m in 0..=max_m {
            out.extend(ode_check(polytope, m, &z, &Rational::zero(), &hi)?);
        }
    }

    for t in &config.ts {
        out.push(z_independence_check(polytope, t, &config.seeds)?);
    }

    let z = pick_generic_z(polytope, config.seeds[0]).rational();
    let formula = engine.integer_quasipolynomial(polytope, &z)?;
    let oracle = interpolated_quasipolynomial(polytope)?;
    let p = Params::new().with("period", polytope.denominator()).z(&z);
    out.push(IdentityReport::compare("quasipolynomial_matches_oracle", p, &formula, &oracle, show_quasi));

    if integral {
        let (hollow, reports) = is_hollow(polytope, config.seeds[0], config.seeds.len())?;
        out.extend(reports);
        let interior = brute_count(polytope, &Rational::one(), Membership::Open)?;
        let p = Params::new().with("seed", config.seeds[0]);
        out.push(IdentityReport::compare("hollow_matches_oracle", p, &hollow, &interior.is_zero(), |b| b.to_string()));
    }
    Ok(out)
}
