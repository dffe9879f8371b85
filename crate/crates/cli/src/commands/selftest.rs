//! `selftest`: seeded runs of the invariant checks.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use loopdress::dressing::{SixPoleDressing, ThreePoleDressing};
use loopdress::loopgroup::{
    check_twisted, check_twisted_projective, epsilon, GaugeSign, ProjLine, Rank, SimpleElement, SixPoleElement, TwistSpec,
};
use loopdress::surfaces::{vacuum_frame, vacuum_immersion, Vacuum};
use loopdress::verify::{lambda_linearity_residual, tzitzeica_residual, FdSettings};
use loopdress::{c, real, Mat3C, Result, C};

use crate::manifest::RunManifest;
use crate::{io_err, CliError, SelftestArgs};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Loopgroup,
    Vacuum,
    Dressing,
    Tzitzeica,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Loopgroup => "loopgroup",
            Suite::Vacuum => "vacuum",
            Suite::Dressing => "dressing",
            Suite::Tzitzeica => "tzitzeica",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: Suite,
    pub name: &'static str,
    pub samples: usize,
    pub max_error: f64,
    pub tol: f64,
    pub error: Option<String>,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.error.is_none() && self.samples > 0 && self.max_error <= self.tol
    }
}

/// Runs `sample` until `n` values are collected; `None` draws are rejected.
fn run<F>(suite: Suite, name: &'static str, tol: f64, n: usize, rng: &mut ChaCha8Rng, mut sample: F) -> Check
where
    F: FnMut(&mut ChaCha8Rng) -> Result<Option<f64>>,
{
    let mut check = Check { suite, name, samples: 0, max_error: 0.0, tol, error: None };
    let mut attempts = 0;
    while check.samples < n && attempts < 200 * n {
        attempts += 1;
        match sample(rng) {
            Ok(Some(e)) => {
                check.samples += 1;
                if e.is_nan() || e > check.max_error {
                    check.max_error = e;
                }
            }
            Ok(None) => {}
            Err(e) => {
                check.error = Some(e.to_string());
                break;
            }
        }
    }
    check
}

fn complex(rng: &mut ChaCha8Rng, scale: f64) -> C {
    c(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

fn polar(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> C {
    C::from_polar(rng.gen_range(lo..hi), rng.gen_range(0.0..std::f64::consts::TAU))
}

fn line(rng: &mut ChaCha8Rng) -> Result<Option<ProjLine>> {
    let (b, cc) = (complex(rng, 1.5), complex(rng, 1.5));
    if (real(2.0) * b * cc - real(1.0)).norm() < 0.2 {
        return Ok(None);
    }
    ProjLine::new(b, cc).map(Some)
}

fn away_from_poles(lambda: C, alpha: C) -> bool {
    let (l3, a3) = (lambda.powi(3), alpha.powi(3));
    let s = 0.05 * (1.0 + a3.norm());
    (l3 - a3).norm() > s && (l3 + a3).norm() > s
}

/// Twist violation at `λ` relative to the size of the loop at the points involved.
fn twisted_rel<F>(f: F, lambda: C) -> Result<Option<f64>>
where
    F: Fn(C) -> Result<Mat3C>,
{
    let dev = check_twisted(&f, TwistSpec::Hyperbolic, &[lambda])?;
    let points = [lambda, epsilon() * lambda, lambda.conj().inv()];
    let mut size: f64 = 1.0;
    for p in points {
        size = size.max(f(p)?.max_abs());
    }
    Ok(Some(dev / size))
}

fn rel(a: &Mat3C, b: &Mat3C) -> f64 {
    a.dist(b) / b.max_abs()
}

/// Excludes elements near a vanishing denominator, whose entries grow without bound.
fn well_conditioned(e: &SixPoleElement) -> bool {
    (1e-2..1e2).contains(&e.d()) && e.line1().b().norm() + e.line1().c().norm() < 1e2
}

fn loopgroup_checks(n: usize, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let s = Suite::Loopgroup;
    let ranks = [Rank::One, Rank::Two];
    let signs = [GaugeSign::Plus, GaugeSign::Minus];
    vec![
        run(s, "determinant_law", 1e-10, n, rng, |rng| {
            let (alpha, lambda) = (polar(rng, 0.3, 2.0), complex(rng, 2.0));
            let Some(l) = line(rng)? else { return Ok(None) };
            if !away_from_poles(lambda, alpha) {
                return Ok(None);
            }
            let e = SimpleElement::new(alpha, l, polar(rng, 0.4, 2.5), ranks[rng.gen_range(0..2)], signs[rng.gen_range(0..2)])?;
            let law = e.determinant_law(lambda);
            Ok(Some((e.eval(lambda)?.det() - law).norm() / law.norm()))
        }),
        run(s, "rank_two_from_rank_one", 1e-10, n, rng, |rng| {
            let (alpha, lambda, d) = (polar(rng, 0.3, 2.0), complex(rng, 2.0), polar(rng, 0.4, 2.5));
            let Some(l) = line(rng)? else { return Ok(None) };
            if !away_from_poles(lambda, alpha) {
                return Ok(None);
            }
            let two = SimpleElement::new(alpha, l, d, Rank::Two, GaugeSign::Plus)?;
            let one = SimpleElement::new(alpha, l, d, Rank::One, GaugeSign::Plus)?;
            let (l3, a3) = (lambda.powi(3), alpha.powi(3));
            let expect = one.eval(-lambda)?.scale((l3 + a3) / (l3 - a3));
            Ok(Some(rel(&two.eval(lambda)?, &expect)))
        }),
        run(s, "unit_circle_element_is_real", 1e-10, n, rng, |rng| {
            let (alpha, b, lambda) = (polar(rng, 1.0, 1.0 + f64::EPSILON), complex(rng, 2.0), polar(rng, 0.5, 2.0));
            if 2.0 * b.norm_sqr() - 1.0 < 0.1 || !away_from_poles(lambda, alpha) {
                return Ok(None);
            }
            let e = SimpleElement::unit_circle(alpha, b, ranks[rng.gen_range(0..2)])?;
            check_twisted_projective(|m| e.eval(m), TwistSpec::Hyperbolic, &[lambda]).map(Some)
        }),
        run(s, "six_pole_element_is_real", 1e-9, n, rng, |rng| {
            let r = if rng.gen_bool(0.5) { rng.gen_range(0.3..0.8) } else { rng.gen_range(1.25..2.0) };
            let alpha = C::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
            let lambda = polar(rng, 0.5, 2.0);
            let Some(l2) = line(rng)? else { return Ok(None) };
            let Ok(e) = SixPoleElement::new(alpha, l2, TwistSpec::Hyperbolic) else { return Ok(None) };
            if !well_conditioned(&e) {
                return Ok(None);
            }
            if !away_from_poles(lambda, alpha) || !away_from_poles(lambda, e.mirror_pole()) {
                return Ok(None);
            }
            twisted_rel(|m| e.eval(m), lambda)
        }),
    ]
}

fn vacuum_checks(n: usize, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let s = Suite::Vacuum;
    let target = real(3f64.sqrt() / 72.0);
    vec![
        run(s, "immersion_product_is_constant", 1e-12, n, rng, |rng| {
            let x = vacuum_immersion(complex(rng, 2.0), polar(rng, 0.5, 2.0))?;
            Ok(Some((x[0] * x[1] * x[2] - target).norm()))
        }),
        run(s, "frame_is_real", 1e-10, n, rng, |rng| {
            let z = complex(rng, 1.0);
            twisted_rel(|m| vacuum_frame(z, m), polar(rng, 0.5, 2.0))
        }),
        run(s, "connection_is_linear_in_lambda", 1e-7, n.min(10), rng, |rng| {
            let ls: Vec<C> = (0..4).map(|_| polar(rng, 1.0, 1.0 + f64::EPSILON)).collect();
            lambda_linearity_residual(vacuum_frame, complex(rng, 0.5), &ls, 1e-4).map(Some)
        }),
    ]
}

struct Examples {
    three: Vec<ThreePoleDressing<Vacuum>>,
    six: SixPoleDressing<Vacuum>,
}

fn examples() -> Result<Examples> {
    let one = SimpleElement::unit_circle(c(0.0, 1.0), c(-0.5, 1.0), Rank::One)?;
    let two = SimpleElement::unit_circle(c(0.0, 1.0), c(1.0, 1.0), Rank::Two)?;
    let line2 = ProjLine::new(c(0.5, 3f64.sqrt() / 2.0), real(0.0))?;
    let six = SixPoleElement::new(c(0.0, -0.5), line2, TwistSpec::Hyperbolic)?;
    Ok(Examples {
        three: vec![ThreePoleDressing::new(one, Vacuum)?, ThreePoleDressing::new(two, Vacuum)?],
        six: SixPoleDressing::new(six, Vacuum)?,
    })
}

/// Regular nodes: admissible with a moderate metric.
fn regular(h: f64) -> bool {
    h > 0.0 && h <= 10.0
}

fn dressing_checks(n: usize, rng: &mut ChaCha8Rng, ex: &Examples) -> Vec<Check> {
    let s = Suite::Dressing;
    let pick = |rng: &mut ChaCha8Rng| ex.three[rng.gen_range(0..ex.three.len())];
    vec![
        run(s, "three_pole_residues_vanish", 1e-9, n, rng, |rng| {
            let d = pick(rng);
            let z = complex(rng, 0.8);
            if !regular(d.at(z)?.h) {
                return Ok(None);
            }
            Ok(Some(d.lemma_residues(z)?.iter().map(Mat3C::max_abs).fold(0.0, f64::max)))
        }),
        run(s, "three_pole_frame_is_real", 1e-8, n, rng, |rng| {
            let d = pick(rng);
            let (z, lambda) = (complex(rng, 0.8), polar(rng, 0.6, 1.6));
            if !regular(d.at(z)?.h) {
                return Ok(None);
            }
            twisted_rel(|m| d.frame(z, m), lambda)
        }),
        run(s, "three_pole_closed_form_column", 1e-9, n, rng, |rng| {
            let d = pick(rng);
            let (z, lambda) = (complex(rng, 1.0), polar(rng, 0.5, 0.8));
            if !regular(d.at(z)?.h) {
                return Ok(None);
            }
            let a = d.frame(z, lambda)?.column(2);
            Ok(Some(a.dist(&d.immersion_column(z, lambda)?) / a.max_abs()))
        }),
        run(s, "six_pole_frame_is_real", 1e-8, n, rng, |rng| {
            let (z, lambda) = (complex(rng, 0.5), polar(rng, 0.6, 1.6));
            if !regular(ex.six.at(z)?.h) || !away_from_poles(lambda, ex.six.element().alpha()) {
                return Ok(None);
            }
            twisted_rel(|m| ex.six.frame(z, m), lambda)
        }),
        run(s, "six_pole_closed_form_column", 1e-8, n, rng, |rng| {
            let (z, lambda) = (complex(rng, 0.5), polar(rng, 0.6, 0.8));
            if !regular(ex.six.at(z)?.h) || !away_from_poles(lambda, ex.six.element().alpha()) {
                return Ok(None);
            }
            let a = ex.six.frame(z, lambda)?.column(2);
            Ok(Some(a.dist(&ex.six.immersion_column(z, lambda)?) / a.max_abs()))
        }),
        run(s, "dressed_connection_is_linear_in_lambda", 1e-6, n.min(10), rng, |rng| {
            let z = complex(rng, 0.5);
            let ls: Vec<C> = (0..4).map(|_| polar(rng, 1.0, 1.0 + f64::EPSILON)).collect();
            if rng.gen_bool(0.5) {
                let d = pick(rng);
                if !regular(d.at(z)?.h) {
                    return Ok(None);
                }
                lambda_linearity_residual(|w, l| d.frame(w, l), z, &ls, 1e-4).map(Some)
            } else {
                if !regular(ex.six.at(z)?.h) {
                    return Ok(None);
                }
                lambda_linearity_residual(|w, l| ex.six.frame(w, l), z, &ls, 1e-4).map(Some)
            }
        }),
    ]
}

/// Residuals are divided by `1 + h³`, the size of the terms of the equation.
fn tzitzeica_checks(n: usize, rng: &mut ChaCha8Rng, ex: &Examples) -> Vec<Check> {
    let s = Suite::Tzitzeica;
    let fd = FdSettings::new(1e-3, true).expect("valid step");
    vec![
        run(s, "three_pole_metric_residual", 1e-5, n, rng, |rng| {
            let d = ex.three[rng.gen_range(0..ex.three.len())];
            let z = complex(rng, 1.5);
            let h = d.at(z)?.h;
            if !regular(h) {
                return Ok(None);
            }
            Ok(Some(tzitzeica_residual(|w| d.at(w).map(|r| r.h), z, fd)? / (1.0 + h.powi(3))))
        }),
        run(s, "six_pole_metric_residual", 1e-5, n, rng, |rng| {
            let z = complex(rng, 1.0);
            let h = ex.six.at(z)?.h;
            if !regular(h) {
                return Ok(None);
            }
            Ok(Some(tzitzeica_residual(|w| ex.six.at(w).map(|r| r.h), z, fd)? / (1.0 + h.powi(3))))
        }),
    ]
}

pub fn run_suites(suite: Suite, seed: u64, samples: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut checks = Vec::new();
    if wants(Suite::Loopgroup) {
        checks.extend(loopgroup_checks(samples, &mut rng));
    }
    if wants(Suite::Vacuum) {
        checks.extend(vacuum_checks(samples, &mut rng));
    }
    if wants(Suite::Dressing) || wants(Suite::Tzitzeica) {
        match examples() {
            Ok(ex) => {
                if wants(Suite::Dressing) {
                    checks.extend(dressing_checks(samples, &mut rng, &ex));
                }
                if wants(Suite::Tzitzeica) {
                    checks.extend(tzitzeica_checks(samples, &mut rng, &ex));
                }
            }
            Err(e) => checks.push(Check {
                suite: Suite::Dressing,
                name: "examples",
                samples: 0,
                max_error: f64::NAN,
                tol: 0.0,
                error: Some(e.to_string()),
            }),
        }
    }
    checks
}

pub fn selftest(a: &SelftestArgs, argv: &[String]) -> std::result::Result<bool, CliError> {
    let checks = run_suites(a.suite, a.seed, a.samples as usize);
    let pass = checks.iter().all(Check::pass);
    let mut m = RunManifest::new("selftest", argv);
    m.param("seed", a.seed.to_string());
    m.param("suite", a.suite.name());
    m.param("samples", a.samples.to_string());
    let rows: Vec<_> = checks
        .iter()
        .map(|c| {
            json!({
                "suite": c.suite.name(),
                "name": c.name,
                "samples": c.samples,
                "max_error": if c.max_error.is_finite() { json!(c.max_error) } else { json!(null) },
                "tol": c.tol,
                "error": c.error,
                "pass": c.pass(),
            })
        })
        .collect();
    m.stat("checks", rows);
    m.stat("passed", checks.iter().filter(|c| c.pass()).count());
    m.stat("failed", checks.iter().filter(|c| !c.pass()).count());
    m.stat("pass", pass);
    match &a.out {
        Some(p) => {
            m.outputs.push(p.display().to_string());
            m.write(p).map_err(io_err(p))?;
        }
        None => print!("{}", m.to_json()),
    }
    for c in checks.iter().filter(|c| !c.pass()) {
        eprintln!("FAIL {}/{}: max error {:e} (tol {:e}) {}", c.suite.name(), c.name, c.max_error, c.tol, c.error.as_deref().unwrap_or(""));
    }
    Ok(pass)
}
