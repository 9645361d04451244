use std::fs;
use std::io::Write;

use barnes_ehrhart::ehrhart::{pick_generic_z, Engine};
use barnes_ehrhart::exact::rational::{format_rational, parse_rational, parse_rational_list, to_decimal};
use barnes_ehrhart::geometry::Membership;
use barnes_ehrhart::moments::{flow_orbits, lattice_flow_tracks};
use barnes_ehrhart::oracle::{brute_count, brute_moment};
use barnes_ehrhart::verify::{verify_polytope, VerifyConfig};
use barnes_ehrhart::{barnes, Error, Polytope, Rational, Result};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Direction, Input};

fn io_err(what: &str, e: std::io::Error) -> Error {
    Error::Input(format!("{what}: {e}"))
}

fn load(input: &Input) -> Result<Polytope> {
    let text = fs::read_to_string(&input.input).map_err(|e| io_err(&input.input.display().to_string(), e))?;
    Polytope::from_json(&text)
}

fn positive(s: &str) -> Result<Rational> {
    let t = parse_rational(s)?;
    if t > Rational::from_integer(0.into()) {
        Ok(t)
    } else {
        Err(Error::Input(format!("t = {s} must be positive")))
    }
}

fn strings(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

/// Explicit `z` if given, otherwise the seeded generic direction.
fn direction(polytope: &Polytope, dir: &Direction) -> Result<(Vec<Rational>, Option<u64>)> {
    match &dir.z {
        Some(s) => {
            let z = parse_rational_list(s)?;
            if z.len() != polytope.dimension() {
                return Err(Error::Input(format!("z has {} entries, expected {}", z.len(), polytope.dimension())));
            }
            Ok((z, None))
        }
        None => Ok((pick_generic_z(polytope, dir.seed).rational(), Some(dir.seed))),
    }
}

fn vertex_cone(polytope: &Polytope, vertex: usize) -> Result<&barnes_ehrhart::VertexCone> {
    polytope.cones().get(vertex).ok_or_else(|| {
        Error::Input(format!("vertex {vertex} out of range, polytope has {}", polytope.vertices().len()))
    })
}

struct Output<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    decimal: Option<usize>,
}

impl Output<'_> {
    fn json(&mut self, v: &Value) -> Result<()> {
        writeln!(self.out, "{v}").map_err(|e| io_err("stdout", e))
    }

    fn approx(&mut self, label: &str, x: &Rational) {
        if let Some(k) = self.decimal {
            let _ = writeln!(self.err, "{label} ~ {}", to_decimal(x, k));
        }
    }
}

pub fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let engine = Engine::new(cli.threads.max(1));
    let mut o = Output { out, err, decimal: cli.decimal };
    match &cli.command {
        Command::Count { input, t, direction: dir } => {
            let p = load(input)?;
            let t = positive(t)?;
            let (z, seed) = direction(&p, dir)?;
            let r = engine.ehrhart_count(&p, &t, &z)?;
            let c = engine.ehrhart_coefficients(&p, &t, &z)?;
            o.approx("count", &r.count);
            o.json(&json!({
                "t": format_rational(&t),
                "count": format_rational(&r.count),
                "z": strings(&z),
                "seed": seed,
                "coefficients": strings(&c),
            }))?;
        }
        Command::Ehrhart { input, poly, direction: dir, .. } => {
            let p = load(input)?;
            let (z, _) = direction(&p, dir)?;
            if *poly {
                let q = engine.ehrhart_polynomial_integer(&p, &z)?;
                o.json(&json!({
                    "period": 1,
                    "pieces": [strings(q.coefficients())],
                    "coefficients": strings(q.coefficients()),
                    "polynomial": q.to_string(),
                }))?;
            } else {
                let q = engine.integer_quasipolynomial(&p, &z)?;
                let pieces: Vec<Vec<String>> = q.pieces().iter().map(|x| strings(x.coefficients())).collect();
                o.json(&json!({ "period": q.period(), "pieces": pieces }))?;
            }
        }
        Command::Moments { input, m, t, direction: dir } => {
            let p = load(input)?;
            let t = positive(t)?;
            let (z, seed) = direction(&p, dir)?;
            let moment = engine.polytope_moment(&p, *m, &t, &z)?;
            let coefficients = match engine.moment_coefficients(&p, *m, &t, &z) {
                Ok(c) => Some(strings(&c)),
                Err(Error::Genericity(_)) => None,
                Err(e) => return Err(e),
            };
            o.approx("moment", &moment);
            o.json(&json!({
                "m": m,
                "t": format_rational(&t),
                "z": strings(&z),
                "seed": seed,
                "moment": format_rational(&moment),
                "coefficients": coefficients,
            }))?;
        }
        Command::Verify { input, t, seeds } => {
            let p = load(input)?;
            let mut config = VerifyConfig { threads: cli.threads.max(1), ..VerifyConfig::default() };
            if let Some(t) = t {
                config.ts = t.split(',').map(|s| positive(s.trim())).collect::<Result<_>>()?;
            }
            config.seeds = seeds
                .split(',')
                .map(|s| s.trim().parse::<u64>().map_err(|e| Error::Input(format!("seed {s:?}: {e}"))))
                .collect::<Result<_>>()?;
            let reports = verify_polytope(&p, &config)?;
            let failed = reports.iter().filter(|r| !r.pass).count();
            let _ = writeln!(o.err, "{} of {} identities pass", reports.len() - failed, reports.len());
            o.json(&serde_json::to_value(&reports).expect("reports serialise"))?;
            return Ok(if failed == 0 { 0 } else { 1 });
        }
        Command::Barnes { k, a } => {
            let a = barnes::LinearForms::new(parse_rational_list(a)?)?;
            let poly = barnes::barnes_polynomial(*k, &a);
            let number = poly.coefficient(0);
            o.approx("B_k(a)", &number);
            o.json(&json!({
                "k": k,
                "a": strings(a.entries()),
                "number": format_rational(&number),
                "coefficients": strings(poly.coefficients()),
            }))?;
        }
        Command::Flow { input, vertex, t_start, t_end, steps, out: path } => {
            let p = load(input)?;
            let cone = vertex_cone(&p, *vertex)?;
            let lo = parse_rational(t_start)?;
            let hi = parse_rational(t_end)?;
            if lo < Rational::from_integer(0.into()) || hi < lo {
                return Err(Error::Input(format!("need 0 <= t-start <= t-end, got {t_start}, {t_end}")));
            }
            let csv = flow_csv(cone, &lo, &hi, *steps);
            match path {
                Some(path) => fs::write(path, csv).map_err(|e| io_err(&path.display().to_string(), e))?,
                None => o.out.write_all(csv.as_bytes()).map_err(|e| io_err("stdout", e))?,
            }
        }
        Command::Orbits { input, vertex } => {
            let p = load(input)?;
            let cone = vertex_cone(&p, *vertex)?;
            let orbits = flow_orbits(cone);
            let points: Vec<Vec<Vec<String>>> =
                orbits.iter().map(|x| x.lattice_points.iter().map(|q| strings(q)).collect()).collect();
            o.json(&json!({
                "vertex": vertex,
                "apex": strings(cone.apex()),
                "orbits": orbits.len(),
                "lengths": orbits.iter().map(|x| x.len()).collect::<Vec<_>>(),
                "periods": orbits.iter().map(|x| x.period()).collect::<Vec<_>>(),
                "lattice_points": points,
            }))?;
        }
        Command::Oracle { input, t, open, m, direction: dir } => {
            let p = load(input)?;
            let t = positive(t)?;
            let mode = if *open { Membership::Open } else { Membership::Closed };
            let count = brute_count(&p, &t, mode)?;
            let mut v = json!({
                "t": format_rational(&t),
                "mode": if *open { "open" } else { "closed" },
                "count": count.to_string(),
            });
            if let Some(m) = m {
                if *open {
                    return Err(Error::Input("moments are over the closed dilate; drop --open".into()));
                }
                let (z, _) = direction(&p, dir)?;
                let moment = brute_moment(&p, &t, &z, *m)?;
                o.approx("moment", &moment);
                v["m"] = json!(m);
                v["z"] = json!(strings(&z));
                v["moment"] = json!(format_rational(&moment));
            }
            o.json(&v)?;
        }
    }
    Ok(0)
}

/// `t,point_index,x1,...,xd` rows for `steps + 1` evenly spaced times.
pub fn flow_csv(cone: &barnes_ehrhart::VertexCone, lo: &Rational, hi: &Rational, steps: usize) -> String {
    let d = cone.dimension();
    let mut s = String::from("t,point_index");
    for i in 1..=d {
        s.push_str(&format!(",x{i}"));
    }
    s.push('\n');
    for k in 0..=steps {
        let t = if steps == 0 {
            lo.clone()
        } else {
            lo + (hi - lo) * Rational::new((k as i64).into(), (steps as i64).into())
        };
        for (i, x) in lattice_flow_tracks(cone, &t).iter().enumerate() {
            s.push_str(&format_rational(&t));
            s.push_str(&format!(",{i}"));
            for c in x {
                s.push(',');
                s.push_str(&format_rational(c));
            }
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use barnes_ehrhart::corpus;
    use barnes_ehrhart::exact::rational::{int, rat};

    use super::*;

    #[test]
    fn zero_steps_is_one_sample() {
        let p = corpus::rational_triangle();
        let csv = flow_csv(&p.cones()[0], &rat(1, 3), &int(2), 0);
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), 10);
        assert!(rows.iter().all(|r| r.starts_with("1/3,")));
    }

    #[test]
    fn header_names_coordinates() {
        let p = corpus::unit_cube(3);
        let csv = flow_csv(&p.cones()[0], &int(0), &int(1), 2);
        assert_eq!(csv.lines().next(), Some("t,point_index,x1,x2,x3"));
        assert_eq!(csv.lines().count(), 1 + 3);
    }

    #[test]
    fn positive_rejects_zero() {
        assert!(positive("0").is_err());
        assert!(positive("3/7").is_ok());
        assert!(positive("abc").is_err());
    }
}
