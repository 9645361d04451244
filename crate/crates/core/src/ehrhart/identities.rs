use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::report::{IdentityReport, Params};
use super::{apex_z, fact, forms, is_smooth, open_count, pick_generic_z, sign, Engine};
use crate::barnes::{barnes_number, barnes_value, power_sums, LinearForms};
use crate::error::{Error, Result};
use crate::exact::combinatorics::binomial_scalar;
use crate::exact::rational::{format_rational, int};
use crate::exact::scalar::pow;
use crate::geometry::{Polytope, VertexCone};
use crate::moments::{moment_sequence, piecewise_moment, Orientation};
use crate::{Polynomial, Rational};

struct VertexData {
    a: LinearForms<Rational>,
    b: Vec<Rational>,
    vz: Rational,
    mu: Vec<Rational>,
    volume: Rational,
}

fn vertex_data(cone: &VertexCone, k: usize, t: &Rational, z: &[Rational]) -> Result<VertexData> {
    let a = forms(cone, z)?;
    Ok(VertexData {
        b: crate::barnes::barnes_numbers_upto(k, &a),
        a,
        vz: apex_z(cone, z),
        mu: moment_sequence(cone, t, z, k, Orientation::Closed)?,
        volume: Rational::from_integer(cone.volume().clone()),
    })
}

fn all_vertices(polytope: &Polytope, k: usize, t: &Rational, z: &[Rational]) -> Result<Vec<VertexData>> {
    polytope.cones().iter().map(|c| vertex_data(c, k, t, z)).collect()
}

fn require_integral(polytope: &Polytope, what: &str) -> Result<()> {
    if polytope.is_integral() {
        Ok(())
    } else {
        Err(Error::Input(format!("{what} needs an integer polytope")))
    }
}

fn s1(a: &LinearForms<Rational>) -> Rational {
    power_sums(a, 1).remove(0)
}

/// The two families of vanishing identities at dilation `t`: the Barnes
/// polynomial form for each `m < d` and the Barnes number form for each
/// `(m, r)` with `r <= m < d`.
pub fn vanishing_identities(polytope: &Polytope, t: &Rational, z: &[Rational]) -> Result<Vec<IdentityReport>> {
    let d = polytope.dimension();
    let data = all_vertices(polytope, d, t, z)?;
    let zero = Rational::zero();
    let mut out = Vec::new();
    for m in 0..d {
        let mut total = Rational::zero();
        for v in &data {
            let x = t * &v.vz;
            for k in 0..=m {
                total += binomial_scalar::<Rational>(m, k) * barnes_value(k, &x, &v.b) * &v.mu[m - k];
            }
        }
        let p = Params::new().with("m", m).with("t", t).z(z);
        out.push(IdentityReport::exact("vanishing_barnes_polynomial_form", p, &total, &zero));
        for r in 0..=m {
            let mut total = Rational::zero();
            for v in &data {
                let inner: Rational = (0..=m - r)
                    .map(|j| &v.b[j] * &v.mu[m - r - j] / (fact(j) * fact(m - r - j)))
                    .sum();
                total += pow(&v.vz, r) * inner;
            }
            let p = Params::new().with("m", m).with("r", r).with("t", t).z(z);
            out.push(IdentityReport::exact("vanishing_barnes_number_form", p, &total, &zero));
        }
    }
    Ok(out)
}

/// Constant term 1 of an integer polytope's Ehrhart polynomial, from the
/// moments of the cells `Π_v ∩ Z^d`.
pub fn constant_term_identity(polytope: &Polytope, z: &[Rational]) -> Result<IdentityReport> {
    require_integral(polytope, "the constant-term identity")?;
    let d = polytope.dimension();
    let data = all_vertices(polytope, d, &Rational::zero(), z)?;
    let mut total = Rational::zero();
    for v in &data {
        for k in 0..=d {
            total += binomial_scalar::<Rational>(d, k) * &v.b[k] * &v.mu[d - k];
        }
    }
    let value = sign(d) / fact(d) * total;
    Ok(IdentityReport::exact("constant_term_one", Params::new().z(z), &value, &Rational::one()))
}

/// Closed-form special cases built from the cell moments: the `r = m`
/// (Brion-Vergne) vanishing sums, the `(1, 0)` and `(m, m-1)` balance
/// identities, and the Brion volume against `c_d`.
pub fn special_case_identities(polytope: &Polytope, z: &[Rational]) -> Result<Vec<IdentityReport>> {
    let d = polytope.dimension();
    let data = all_vertices(polytope, 1, &Rational::zero(), z)?;
    let zero = Rational::zero();
    let half = Rational::new(1.into(), 2.into());
    let mut out = Vec::new();
    for m in 0..d {
        let total: Rational = data
            .iter()
            .map(|v| pow(&v.vz, m) * &v.volume / v.a.product())
            .sum();
        let p = Params::new().with("m", m).z(z);
        out.push(IdentityReport::exact("brion_vergne_vanishing", p, &total, &zero));
    }
    for m in 1..d {
        let lhs: Rational = data
            .iter()
            .map(|v| pow(&v.vz, m - 1) / v.a.product() * &v.mu[1])
            .sum();
        let rhs: Rational = data
            .iter()
            .map(|v| &half * pow(&v.vz, m - 1) * &v.volume * s1(&v.a) / v.a.product())
            .sum();
        let name = if m == 1 { "cell_moment_balance_m1_r0" } else { "cell_moment_balance_r_m_minus_1" };
        out.push(IdentityReport::exact(name, Params::new().with("m", m).z(z), &lhs, &rhs));
    }
    let vol = super::volume_via_brion(polytope, z)?;
    for t in [int(1), int(2)] {
        let cd = super::coefficient_c_r(polytope, d, &t, z)?;
        let p = Params::new().with("t", &t).z(z);
        out.push(IdentityReport::exact("brion_volume_is_leading_coefficient", p, &vol, &cd));
    }
    Ok(out)
}

/// Hollowness test for an integer polytope at `samples` seeded directions.
///
/// Each report compares the interior-point Barnes sum at `t = 1` with
/// `d!` times the interior count; the polytope is hollow iff every sum
/// vanishes. A mismatch between the two is an internal-consistency error.
pub fn is_hollow(polytope: &Polytope, seed: u64, samples: usize) -> Result<(bool, Vec<IdentityReport>)> {
    require_integral(polytope, "the hollowness criterion")?;
    let d = polytope.dimension();
    let mut reports = Vec::new();
    let mut verdicts = BTreeSet::new();
    for i in 0..samples.max(1) {
        let z = pick_generic_z(polytope, seed.wrapping_add(i as u64)).rational();
        let data = all_vertices(polytope, d, &Rational::zero(), &z)?;
        let mut total = Rational::zero();
        for v in &data {
            let x = -&v.vz;
            for k in 0..=d {
                total += binomial_scalar::<Rational>(d, k) * barnes_value(k, &x, &v.b) * &v.mu[d - k];
            }
        }
        let interior = open_count(polytope, &Rational::one(), &z)?;
        if total.is_zero() != interior.is_zero() {
            return Err(Error::InternalConsistency(format!(
                "hollowness sum {} disagrees with interior count {}",
                format_rational(&total),
                format_rational(&interior)
            )));
        }
        verdicts.insert(total.is_zero());
        let p = Params::new().with("seed", seed.wrapping_add(i as u64)).z(&z);
        reports.push(IdentityReport::exact("hollow_criterion", p, &total, &(fact(d) * interior)));
    }
    if verdicts.len() > 1 {
        return Err(Error::InternalConsistency("hollowness verdict depends on z".into()));
    }
    Ok((verdicts.contains(&true), reports))
}

/// Identities specific to smooth polytopes.
pub fn smooth_identities(polytope: &Polytope, z: &[Rational]) -> Result<Vec<IdentityReport>> {
    if !is_smooth(polytope) {
        return Err(Error::Input("polytope is not smooth".into()));
    }
    let d = polytope.dimension();
    let data = all_vertices(polytope, d, &Rational::zero(), z)?;
    let zero = Rational::zero();
    let mut out = Vec::new();
    for t in [int(1), int(2)] {
        for m in 0..d {
            let total: Rational = data.iter().map(|v| barnes_value(m, &(&t * &v.vz), &v.b)).sum();
            let p = Params::new().with("m", m).with("t", &t).z(z);
            out.push(IdentityReport::exact("smooth_vanishing_polynomial_form", p, &total, &zero));
        }
    }
    for m in 0..d {
        for r in 0..=m {
            let total: Rational = data.iter().map(|v| pow(&v.vz, r) * &v.b[m - r]).sum();
            let p = Params::new().with("m", m).with("r", r).z(z);
            out.push(IdentityReport::exact("smooth_vanishing_number_form", p, &total, &zero));
        }
    }
    let ct: Rational = sign(d) / fact(d) * data.iter().map(|v| v.b[d].clone()).sum::<Rational>();
    out.push(IdentityReport::exact("smooth_constant_term", Params::new().z(z), &ct, &Rational::one()));
    for m in 1..d {
        let total: Rational = data
            .iter()
            .map(|v| pow(&v.vz, m - 1) * s1(&v.a) / v.a.product())
            .sum();
        let p = Params::new().with("m", m).z(z);
        out.push(IdentityReport::exact("smooth_brion_vergne_vanishing", p, &total, &zero));
    }
    let ratios = |v: &VertexData| -> Rational {
        let e = v.a.entries();
        let mut s = int(3);
        for i in 0..e.len() {
            for j in 0..e.len() {
                if i != j {
                    s += &e[i] / &e[j];
                }
            }
        }
        s
    };
    if d == 2 {
        let total: Rational = data.iter().map(ratios).sum();
        out.push(IdentityReport::exact("twelve_identity", Params::new().z(z), &total, &int(12)));
    }
    if d == 3 {
        let total: Rational = data.iter().map(ratios).sum();
        out.push(IdentityReport::exact("twenty_four_identity", Params::new().z(z), &total, &int(24)));
        let ps: Rational = data
            .iter()
            .map(|v| {
                let s = power_sums(&v.a, 2);
                (&s[0] * &s[0] * &s[0] - &s[0] * &s[1]) / v.a.product()
            })
            .sum::<Rational>()
            / int(2);
        out.push(IdentityReport::exact("twenty_four_identity_power_sums", Params::new().z(z), &ps, &int(24)));
    }
    let engine = Engine::default();
    for t in 1..=3 {
        let t = int(t);
        let p = Params::new().with("t", &t).z(z);
        out.push(IdentityReport::exact(
            "smooth_count_agrees",
            p,
            &engine.count_smooth(polytope, &t, z)?,
            &engine.count(polytope, &t, z)?,
        ));
        for m in 1..=2 {
            let p = Params::new().with("m", m).with("t", &t).z(z);
            out.push(IdentityReport::exact(
                "smooth_moment_agrees",
                p,
                &engine.smooth_moment(polytope, m, &t, z)?,
                &engine.polytope_moment(polytope, m, &t, z)?,
            ));
        }
    }
    Ok(out)
}

/// `((-1)^d/d!) sum_{α ∈ {±1}^d} (α·z)^j B_{d-j}(-α∘z) = 2^j`.
pub fn hypercube_barnes_identity(d: usize, j: usize, z: &[Rational]) -> Result<IdentityReport> {
    if z.len() != d || j > d {
        return Err(Error::Input(format!("need |z| = d = {d} and j <= d, got |z| = {} and j = {j}", z.len())));
    }
    let mut total = Rational::zero();
    for mask in 0u64..(1 << d) {
        let alpha: Vec<Rational> = (0..d)
            .map(|i| if mask & (1 << i) != 0 { -Rational::one() } else { Rational::one() })
            .collect();
        let s: Rational = alpha.iter().zip(z).map(|(a, b)| a * b).sum();
        let a = LinearForms::new(alpha.iter().zip(z).map(|(a, b)| -(a * b)).collect())?;
        total += pow(&s, j) * barnes_number(d - j, &a);
    }
    let value = sign(d) / fact(d) * total;
    let expected = pow(&int(2), j);
    let p = Params::new().with("d", d).with("j", j).z(z);
    Ok(IdentityReport::exact("hypercube_barnes_identity", p, &value, &expected))
}

/// Counts and every `c_r(t)` agree across directions drawn from `seeds`.
pub fn z_independence_check(polytope: &Polytope, t: &Rational, seeds: &[u64]) -> Result<IdentityReport> {
    if seeds.is_empty() {
        return Err(Error::Input("need at least one seed".into()));
    }
    let engine = Engine::default();
    let mut rows = Vec::new();
    for &s in seeds {
        let z = pick_generic_z(polytope, s).rational();
        let mut row = vec![engine.count(polytope, t, &z)?];
        row.extend(engine.ehrhart_coefficients(polytope, t, &z)?);
        rows.push(row);
    }
    let first = rows[0].clone();
    let odd = rows.iter().find(|r| **r != first).unwrap_or(&first).clone();
    let seeds_s = seeds.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let p = Params::new().with("t", t).with("seeds", seeds_s);
    Ok(IdentityReport::compare("z_independence", p, &odd, &first, |r| {
        r.iter().map(format_rational).collect::<Vec<_>>().join(" ")
    }))
}

/// Symbolic check of `d_r'(t) = -(r+1) d_{r+1}(t)` on every breakpoint-free
/// piece of `(lo, hi]`, for the `m`-th moment (`m = 0` is the count).
pub fn ode_check(polytope: &Polytope, m: usize, z: &[Rational], lo: &Rational, hi: &Rational) -> Result<Vec<IdentityReport>> {
    let d = polytope.dimension();
    let k = d + m;
    let mut per_vertex = Vec::new();
    let mut cuts: BTreeSet<Rational> = BTreeSet::new();
    for cone in polytope.cones() {
        let pws = (0..=k)
            .map(|n| piecewise_moment(cone, z, n, lo, hi))
            .collect::<Result<Vec<_>>>()?;
        cuts.extend(pws[0].breakpoints().iter().cloned());
        let a = forms(cone, z)?;
        per_vertex.push((crate::barnes::barnes_numbers_upto(k, &a), apex_z(cone, z), pws));
    }
    let cuts: Vec<Rational> = cuts.into_iter().collect();
    let scale = sign(d) * fact(m);
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        let mid = (&w[0] + &w[1]) / int(2);
        let mut coeffs = vec![Polynomial::zero(); k + 2];
        for (b, vz, pws) in &per_vertex {
            let mu: Vec<&Polynomial> = pws
                .iter()
                .map(|p| p.polynomial_at(&mid).expect("midpoint inside interval"))
                .collect();
            for (r, slot) in coeffs.iter_mut().enumerate().take(k + 1) {
                let mut inner = Polynomial::zero();
                for j in 0..=k - r {
                    inner = &inner + &mu[k - r - j].scale(&(&b[j] / (fact(j) * fact(k - r - j))));
                }
                *slot = &*slot + &inner.scale(&(pow(vz, r) / fact(r) * &scale));
            }
        }
        for r in 0..=k {
            let lhs = coeffs[r].differentiate();
            let rhs = coeffs[r + 1].scale(&-int(r as i64 + 1));
            let p = Params::new()
                .with("m", m)
                .with("r", r)
                .with("piece", format!("({}, {})", format_rational(&w[0]), format_rational(&w[1])))
                .z(z);
            out.push(IdentityReport::compare("coefficient_ode", p, &lhs, &rhs, |q| q.to_string()));
        }
    }
    Ok(out)
}
