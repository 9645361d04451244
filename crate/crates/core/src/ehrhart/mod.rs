//! Ehrhart quasi-polynomials, dilate moments and their coefficients from
//! Barnes polynomials of the vertex cones.
//!
//! Every formula here is a rescaling of one per-vertex quantity,
//!
//! `E_r(v) = x^r / r! * sum_j B_j(a_v) μ_{m-r-j}(t) / (j! (m-r-j)!)`,
//!
//! with `x = <v, z>` and closed moments, or `x = -<v, z>` and open moments.
//! Summed over the vertices and multiplied by `t^r` it is the coefficient of
//! `x^{m-d}` in the Laurent expansion of the dilate's point transform.

mod direction;
mod identities;
mod report;

pub use direction::{pick_generic_z, GenericDirection};
pub use identities::{
    constant_term_identity, hypercube_barnes_identity, is_hollow, ode_check, smooth_identities,
    special_case_identities, vanishing_identities, z_independence_check,
};
pub use report::{IdentityReport, Params};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::barnes::{barnes_value, BarnesCache, LinearForms};
use crate::error::{Error, Result};
use crate::exact::combinatorics::{big, factorial};
use crate::exact::rational::format_rational;
use crate::exact::scalar::pow;
use crate::exact::polynomial::lagrange_interpolate;
use crate::exact::QuasiPolynomial;
use crate::geometry::{Polytope, VertexCone};
use crate::moments::{moment_sequence, Orientation};
use crate::{Polynomial, Rational};

pub(crate) fn fact(n: usize) -> Rational {
    Rational::from_integer(big(&factorial(n)))
}

pub(crate) fn sign(d: usize) -> Rational {
    if d.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub(crate) fn apex_z(cone: &VertexCone, z: &[Rational]) -> Rational {
    cone.apex().iter().zip(z).map(|(a, b)| a * b).sum()
}

pub(crate) fn forms(cone: &VertexCone, z: &[Rational]) -> Result<LinearForms<Rational>> {
    if z.len() != cone.dimension() {
        return Err(Error::Input(format!(
            "z has {} entries, expected {}",
            z.len(),
            cone.dimension()
        )));
    }
    LinearForms::new(cone.linear_forms(z))
}

fn check_t(t: &Rational) -> Result<()> {
    if t.is_positive() {
        Ok(())
    } else {
        Err(Error::Input(format!("dilation t = {t} must be positive")))
    }
}

fn check_integral(what: &str, x: Rational) -> Result<Rational> {
    if x.is_integer() {
        Ok(x)
    } else {
        Err(Error::InternalConsistency(format!(
            "{what} evaluated to the non-integer {}",
            format_rational(&x)
        )))
    }
}

/// Shared state for the vertex sums: a Barnes-number cache and the number
/// of worker threads used to spread vertices.
#[derive(Debug)]
pub struct Engine {
    cache: BarnesCache,
    threads: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Self::new(1)
    }
}

impl Engine {
    pub fn new(threads: usize) -> Self {
        Self {
            cache: BarnesCache::new(),
            threads: threads.max(1),
        }
    }

    pub fn cache(&self) -> &BarnesCache {
        &self.cache
    }

    /// Maps `f` over vertex indices, in parallel when `threads > 1`.
    /// Output order matches the vertex order.
    pub fn map_vertices<R, F>(&self, n: usize, f: F) -> Result<Vec<R>>
    where
        R: Send,
        F: Fn(usize) -> Result<R> + Sync,
    {
        if self.threads == 1 || n < 2 {
            return (0..n).map(f).collect();
        }
        let chunk = n.div_ceil(self.threads);
        let f = &f;
        let parts: Vec<Result<Vec<R>>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..n)
                .step_by(chunk)
                .map(|lo| s.spawn(move || (lo..(lo + chunk).min(n)).map(f).collect::<Result<Vec<R>>>()))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("vertex worker panicked"))
                .collect()
        });
        let mut out = Vec::with_capacity(n);
        for p in parts {
            out.extend(p?);
        }
        Ok(out)
    }

    /// `[E_0(v), ..., E_m(v)]` for one vertex cone.
    pub fn vertex_expansion(
        &self,
        cone: &VertexCone,
        m: usize,
        t: &Rational,
        z: &[Rational],
        orientation: Orientation,
    ) -> Result<Vec<Rational>> {
        let a = forms(cone, z)?;
        let b = self.cache.numbers(m, &a);
        let mu = moment_sequence(cone, t, z, m, orientation)?;
        let vz = apex_z(cone, z);
        let x = match orientation {
            Orientation::Closed => vz,
            Orientation::Open => -vz,
        };
        Ok((0..=m)
            .map(|r| {
                let inner: Rational = (0..=m - r)
                    .map(|j| &b[j] * &mu[m - r - j] / (fact(j) * fact(m - r - j)))
                    .sum();
                pow(&x, r) / fact(r) * inner
            })
            .collect())
    }

    /// Per-vertex expansions and their sum.
    pub fn expansion(
        &self,
        polytope: &Polytope,
        m: usize,
        t: &Rational,
        z: &[Rational],
        orientation: Orientation,
    ) -> Result<(Vec<Rational>, Vec<Vec<Rational>>)> {
        let cones = polytope.cones();
        let per = self.map_vertices(cones.len(), |i| {
            self.vertex_expansion(&cones[i], m, t, z, orientation)
        })?;
        let mut total = vec![Rational::zero(); m + 1];
        for e in &per {
            for (acc, x) in total.iter_mut().zip(e) {
                *acc += x;
            }
        }
        Ok((total, per))
    }

    fn coefficients_unchecked(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Vec<Rational>> {
        let d = polytope.dimension();
        let (e, _) = self.expansion(polytope, d, t, z, Orientation::Closed)?;
        let s = sign(d);
        Ok(e.into_iter().map(|x| x * &s).collect())
    }

    /// `[c_0(t), ..., c_d(t)]` with `L_P(t) = sum_r c_r(t) t^r`.
    pub fn ehrhart_coefficients(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Vec<Rational>> {
        check_t(t)?;
        self.coefficients_unchecked(polytope, t, z)
    }

    pub fn ehrhart_count(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<EhrhartResult> {
        check_t(t)?;
        let d = polytope.dimension();
        let (_, per) = self.expansion(polytope, d, t, z, Orientation::Closed)?;
        let s = sign(d);
        let per_vertex: Vec<Rational> = per
            .iter()
            .map(|e| &s * Polynomial::new(e.clone()).eval(t))
            .collect();
        let count = check_integral("lattice-point count", per_vertex.iter().sum())?;
        Ok(EhrhartResult {
            t: t.clone(),
            z: z.to_vec(),
            count,
            per_vertex,
        })
    }

    pub fn count(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Rational> {
        Ok(self.ehrhart_count(polytope, t, z)?.count)
    }

    /// Per-residue polynomials for integer dilates; the residue-0 piece is
    /// sampled at `t = D`.
    pub fn integer_quasipolynomial(&self, polytope: &Polytope, z: &[Rational]) -> Result<QuasiPolynomial<Rational>> {
        let period = period_of(polytope)?;
        let pieces = (0..period)
            .map(|rho| {
                let t = Rational::from_integer(if rho == 0 { period } else { rho }.into());
                self.ehrhart_coefficients(polytope, &t, z).map(Polynomial::new)
            })
            .collect::<Result<Vec<_>>>()?;
        QuasiPolynomial::new(pieces)
    }

    /// Ehrhart polynomial of an integer polytope from the moments of the
    /// undilated cells `Π_v ∩ Z^d`.
    pub fn ehrhart_polynomial_integer(&self, polytope: &Polytope, z: &[Rational]) -> Result<Polynomial> {
        if !polytope.is_integral() {
            return Err(Error::Input(format!(
                "polytope has denominator {}; use the quasi-polynomial instead",
                polytope.denominator()
            )));
        }
        Ok(Polynomial::new(self.coefficients_unchecked(polytope, &Rational::zero(), z)?))
    }

    /// `[d_0(t), ..., d_{d+m}(t)]` with `sum_{p in tP} <p, z>^m = sum_r d_r(t) t^r`.
    pub fn moment_coefficients(&self, polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Vec<Rational>> {
        check_t(t)?;
        let d = polytope.dimension();
        let (e, _) = self.expansion(polytope, d + m, t, z, Orientation::Closed)?;
        let scale = sign(d) * fact(m);
        Ok(e.into_iter().map(|x| x * &scale).collect())
    }

    /// `sum_{p in tP} <p, z>^m`. The vertex formula needs `z` generic; for
    /// a non-generic `z` the sum is recovered by interpolating the degree-`m`
    /// polynomial `s -> moment(z + s w)` at generic points and setting `s = 0`.
    pub fn polytope_moment(&self, polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
        match self.moment_coefficients(polytope, m, t, z) {
            Ok(c) => Ok(Polynomial::new(c).eval(t)),
            Err(Error::Genericity(_)) => self.moment_by_interpolation(polytope, m, t, z),
            Err(e) => Err(e),
        }
    }

    fn moment_by_interpolation(&self, polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
        let w = pick_generic_z(polytope, 0).rational();
        let mut samples = Vec::with_capacity(m + 1);
        let mut s = 0i64;
        while samples.len() <= m {
            s += 1;
            let shifted: Vec<Rational> = z.iter().zip(&w).map(|(a, b)| a + b * Rational::from_integer(s.into())).collect();
            match self.moment_coefficients(polytope, m, t, &shifted) {
                Ok(c) => samples.push((Rational::from_integer(s.into()), Polynomial::new(c).eval(t))),
                Err(Error::Genericity(_)) => continue,
                Err(e) => return Err(e),
            }
        }
        Ok(lagrange_interpolate(&samples)?.eval(&Rational::zero()))
    }

    /// `[b_0(t), ..., b_d(t)]` for the interior count `L_{P°}(t)`.
    pub fn open_coefficients(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Vec<Rational>> {
        check_t(t)?;
        Ok(self.expansion(polytope, polytope.dimension(), t, z, Orientation::Open)?.0)
    }

    pub fn open_count(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Rational> {
        let b = self.open_coefficients(polytope, t, z)?;
        check_integral("interior count", Polynomial::new(b).eval(t))
    }

    /// `(-1)^d/d! sum_v B_d(t<v,z>, a_v)`; integer `t` only.
    pub fn count_smooth(&self, polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Rational> {
        self.smooth_sum(polytope, 0, t, z)
    }

    /// `(-1)^d m!/(d+m)! sum_v B_{d+m}(t<v,z>, a_v)`; integer `t` only.
    pub fn smooth_moment(&self, polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
        self.smooth_sum(polytope, m, t, z)
    }

    fn smooth_sum(&self, polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
        if !is_smooth(polytope) {
            return Err(Error::Input("polytope is not smooth".into()));
        }
        check_t(t)?;
        if !t.is_integer() {
            return Err(Error::Input("smooth formulas hold for integer dilations only".into()));
        }
        let d = polytope.dimension();
        let k = d + m;
        let mut total = Rational::zero();
        for cone in polytope.cones() {
            let b = self.cache.numbers(k, &forms(cone, z)?);
            total += barnes_value(k, &(t * apex_z(cone, z)), &b);
        }
        Ok(sign(d) * fact(m) / fact(k) * total)
    }
}

/// Period `D` as a machine integer.
pub(crate) fn period_of(polytope: &Polytope) -> Result<usize> {
    usize::try_from(polytope.denominator().clone())
        .ok()
        .filter(|&p| p <= 1_000_000)
        .ok_or_else(|| Error::Resource(format!("period {} too large", polytope.denominator())))
}

/// A lattice-point count together with its per-vertex contributions.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EhrhartResult {
    #[serde(serialize_with = "ser_rational")]
    pub t: Rational,
    #[serde(serialize_with = "ser_rationals")]
    pub z: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub count: Rational,
    #[serde(serialize_with = "ser_rationals")]
    pub per_vertex: Vec<Rational>,
}

pub(crate) fn ser_rational<S: serde::Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

pub(crate) fn ser_rationals<S: serde::Serializer>(xs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(format_rational))
}

/// True iff the polytope is integral and every vertex cone is unimodular.
pub fn is_smooth(polytope: &Polytope) -> bool {
    polytope.is_integral() && polytope.cones().iter().all(VertexCone::is_unimodular)
}

/// `((-1)^d / d!) sum_v vol Π_v <v,z>^d / prod_k <w_k(v), z>`.
pub fn volume_via_brion(polytope: &Polytope, z: &[Rational]) -> Result<Rational> {
    let d = polytope.dimension();
    let mut total = Rational::zero();
    for cone in polytope.cones() {
        let a = forms(cone, z)?;
        total += Rational::from_integer(cone.volume().clone()) * pow(&apex_z(cone, z), d) / a.product();
    }
    Ok(sign(d) / fact(d) * total)
}

pub fn count_via_barnes(polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Rational> {
    Engine::default().count(polytope, t, z)
}

pub fn ehrhart_count(polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<EhrhartResult> {
    Engine::default().ehrhart_count(polytope, t, z)
}

pub fn ehrhart_coefficients(polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Vec<Rational>> {
    Engine::default().ehrhart_coefficients(polytope, t, z)
}

pub fn coefficient_c_r(polytope: &Polytope, r: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
    let c = ehrhart_coefficients(polytope, t, z)?;
    c.get(r)
        .cloned()
        .ok_or_else(|| Error::Input(format!("r = {r} exceeds the dimension {}", c.len() - 1)))
}

pub fn integer_quasipolynomial(polytope: &Polytope, z: &[Rational]) -> Result<QuasiPolynomial<Rational>> {
    Engine::default().integer_quasipolynomial(polytope, z)
}

pub fn ehrhart_polynomial_integer(polytope: &Polytope, z: &[Rational]) -> Result<Polynomial> {
    Engine::default().ehrhart_polynomial_integer(polytope, z)
}

pub fn polytope_moment(polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
    Engine::default().polytope_moment(polytope, m, t, z)
}

pub fn moment_coefficients(polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Vec<Rational>> {
    Engine::default().moment_coefficients(polytope, m, t, z)
}

pub fn moment_coefficient_d_r(polytope: &Polytope, m: usize, r: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
    let c = moment_coefficients(polytope, m, t, z)?;
    c.get(r)
        .cloned()
        .ok_or_else(|| Error::Input(format!("r = {r} exceeds d + m = {}", c.len() - 1)))
}

pub fn open_count(polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Rational> {
    Engine::default().open_count(polytope, t, z)
}

pub fn count_smooth(polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Rational> {
    Engine::default().count_smooth(polytope, t, z)
}

pub fn smooth_moment(polytope: &Polytope, m: usize, t: &Rational, z: &[Rational]) -> Result<Rational> {
    Engine::default().smooth_moment(polytope, m, t, z)
}
