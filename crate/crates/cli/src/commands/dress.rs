//! `dress3` and `dress6`.

use std::path::{Path, PathBuf};

use loopdress::dressing::{MetricGrid, NodeStatus, SixPoleDressing, ThreePoleDressing};
use loopdress::loopgroup::{psi, ProjLine, Rank, SimpleElement, SixPoleElement, TwistSpec};
use loopdress::surfaces::Vacuum;
use loopdress::{SurfaceGrid, C};

use crate::args::format_complex;
use crate::manifest::RunManifest;
use crate::output::{metric_csv, surface_obj, write_atomic};
use crate::{io_err, CliError, Dress3Args, Dress6Args};

fn check_lambda(lambda: Option<C>) -> Result<(), CliError> {
    match lambda {
        Some(l) if (l.norm() - 1.0).abs() > 1e-12 => {
            Err(CliError::Param(format!("|lambda| must be 1 for a real surface, got {}", l.norm())))
        }
        _ => Ok(()),
    }
}

fn manifest_path(out: &Path, manifest: &Option<PathBuf>) -> PathBuf {
    manifest.clone().unwrap_or_else(|| out.with_extension("manifest.json"))
}

fn metric_stats(m: &mut RunManifest, metric: &MetricGrid) {
    m.stat("nodes", metric.status.len());
    m.stat("admissible", metric.count(NodeStatus::Admissible));
    m.stat("negative", metric.count(NodeStatus::Negative));
    m.stat("failed", metric.count(NodeStatus::Failed));
    let good = metric
        .h
        .values()
        .iter()
        .zip(&metric.status)
        .filter(|(_, s)| **s == NodeStatus::Admissible)
        .map(|(v, _)| v.re);
    let (lo, hi) = good.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    m.stat_f64("h_min", lo);
    m.stat_f64("h_max", hi);
}

fn write_outputs(
    m: &mut RunManifest,
    metric: &MetricGrid,
    out: &Path,
    surface: Option<(SurfaceGrid, &Path)>,
    manifest: &Path,
) -> Result<(), CliError> {
    metric_stats(m, metric);
    write_atomic(out, metric_csv(metric).as_bytes()).map_err(io_err(out))?;
    m.outputs.push(out.display().to_string());
    if let Some((surface, path)) = surface {
        let obj = surface_obj(&surface, |k| metric.status[k] == NodeStatus::Admissible);
        write_atomic(path, obj.text.as_bytes()).map_err(io_err(path))?;
        m.outputs.push(path.display().to_string());
        m.stat("obj_vertices", obj.vertices);
        m.stat("obj_faces", obj.faces);
    }
    m.outputs.push(manifest.display().to_string());
    m.write(manifest).map_err(io_err(manifest))
}

pub fn dress3(a: &Dress3Args, argv: &[String]) -> Result<bool, CliError> {
    check_lambda(a.lambda)?;
    let spec = TwistSpec::from_mean_curvature(a.mean_curvature)?;
    let rank = if a.rank == 1 { Rank::One } else { Rank::Two };
    let element = SimpleElement::unit_circle(a.alpha, a.b, rank)?;
    let dressing = ThreePoleDressing::with_spec(element, Vacuum, spec)?;

    let mut m = RunManifest::new("dress3", argv);
    m.param("alpha", format_complex(a.alpha));
    m.param("b", format_complex(a.b));
    m.param("rank", a.rank.to_string());
    m.param("H", a.mean_curvature.to_string());
    if let Some(l) = a.lambda {
        m.param("lambda", format_complex(l));
    }
    m.param("d", element.d().re.to_string());
    m.grid = Some(a.grid.to_string());

    let metric = dressing.metric(a.grid);
    let surface = a.obj.as_deref().map(|p| (dressing.surface(a.grid, a.lambda.expect("required by clap")), p));
    write_outputs(&mut m, &metric, &a.out, surface, &manifest_path(&a.out, &a.manifest))?;
    Ok(true)
}

pub fn dress6(a: &Dress6Args, argv: &[String]) -> Result<bool, CliError> {
    check_lambda(a.lambda)?;
    let spec = TwistSpec::from_mean_curvature(a.mean_curvature)?;
    let line2 = ProjLine::new(a.b2, a.c2)?;
    let on_circle = (a.alpha.norm() - 1.0).abs() < 1e-12;
    let p = psi(a.alpha, &line2, spec);
    if !on_circle && p <= 0.0 {
        return Err(loopdress::Error::NonPositivePsi { psi: p }.into());
    }
    let element = SixPoleElement::new(a.alpha, line2, spec)?;
    let dressing = SixPoleDressing::new(element, Vacuum)?;

    let mut m = RunManifest::new("dress6", argv);
    m.param("alpha", format_complex(a.alpha));
    m.param("b2", format_complex(a.b2));
    m.param("c2", format_complex(a.c2));
    m.param("H", a.mean_curvature.to_string());
    if let Some(l) = a.lambda {
        m.param("lambda", format_complex(l));
    }
    m.param("b1", format_complex(element.line1().b()));
    m.param("c1", format_complex(element.line1().c()));
    m.param("d", element.d().to_string());
    m.param("Psi", p.to_string());
    m.grid = Some(a.grid.to_string());
    if element.is_trivial() {
        m.notes.push("trivial dressing".into());
    }

    let metric = dressing.metric(a.grid);
    let surface = a.obj.as_deref().map(|p| (dressing.surface(a.grid, a.lambda.expect("required by clap")), p));
    write_outputs(&mut m, &metric, &a.out, surface, &manifest_path(&a.out, &a.manifest))?;
    Ok(true)
}
