//! `hildebrand`: mesh of Hildebrand's sphere and a check of its invariants.

use rayon::prelude::*;
use serde_json::json;

use loopdress::surfaces::{affine_invariants_fd, dressing_offset, hildebrand_exp_psi, hildebrand_surface_shifted};
use loopdress::verify::FdSettings;
use loopdress::{c, SurfaceGrid};

use crate::manifest::RunManifest;
use crate::output::{surface_obj, write_atomic};
use crate::{io_err, CliError, HildebrandArgs};

/// Nodes closer than this to the singular line are left out of the invariant check.
const SINGULAR_MARGIN: f64 = 0.1;

#[derive(Debug, Clone, Copy, Default)]
struct Worst {
    psi_rel: f64,
    psi_at: (f64, f64),
    u_abs: f64,
    u_at: (f64, f64),
}

pub fn hildebrand(a: &HildebrandArgs, argv: &[String]) -> Result<bool, CliError> {
    let settings = FdSettings::new(a.step, true)?;
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(CliError::Param("--tol must be positive".into()));
    }
    let shift = if a.offset { dressing_offset() } else { 0.0 };
    let (x0, x1) = a.grid.x_range();
    let straddles = x0 <= shift && shift <= x1;
    if straddles && !a.allow_singular {
        return Err(CliError::Param(format!(
            "grid contains the singular line x = {shift}; pass --allow-singular to mesh it anyway"
        )));
    }
    let grid = a.grid;
    let surf = |x: f64, y: f64| hildebrand_surface_shifted(x, y, shift);
    let surface = SurfaceGrid::from_fn(grid, |z| surf(z.re, z.im));
    let obj = surface_obj(&surface, |_| true);

    let checks: Vec<Option<Result<Worst, String>>> = (0..grid.len())
        .into_par_iter()
        .map(|k| {
            let (i, j) = grid.node(k);
            let (x, y) = (grid.x(i), grid.y(j));
            if (x - shift).abs() < SINGULAR_MARGIN {
                return None;
            }
            let run = || -> loopdress::Result<Worst> {
                let inv = affine_invariants_fd(surf, c(x, y), settings)?;
                let expect = hildebrand_exp_psi(x - shift)?;
                Ok(Worst {
                    psi_rel: (inv.exp_psi() - expect).abs() / expect,
                    psi_at: (x, y),
                    u_abs: (inv.u.norm() - 1.0).abs(),
                    u_at: (x, y),
                })
            };
            Some(run().map_err(|e| format!("({x}, {y}): {e}")))
        })
        .collect();
    let mut worst = Worst::default();
    let (mut checked, mut skipped) = (0usize, 0usize);
    let mut failures = Vec::new();
    for w in checks {
        match w {
            None => skipped += 1,
            Some(Err(e)) => failures.push(e),
            Some(Ok(w)) => {
                checked += 1;
                if w.psi_rel > worst.psi_rel {
                    (worst.psi_rel, worst.psi_at) = (w.psi_rel, w.psi_at);
                }
                if w.u_abs > worst.u_abs {
                    (worst.u_abs, worst.u_at) = (w.u_abs, w.u_at);
                }
            }
        }
    }
    let pass = failures.is_empty() && checked > 0 && worst.psi_rel <= a.tol && worst.u_abs <= a.tol;

    let report = a.report.clone().unwrap_or_else(|| a.obj.with_extension("invariants.json"));
    let mut m = RunManifest::new("hildebrand", argv);
    m.param("shift", shift.to_string());
    m.param("allow_singular", a.allow_singular.to_string());
    m.param("step", a.step.to_string());
    m.grid = Some(grid.to_string());
    m.tolerances.insert("tol".into(), a.tol);
    m.stat("obj_vertices", obj.vertices);
    m.stat("obj_faces", obj.faces);
    m.stat("missing_points", surface.missing());
    m.stat("checked", checked);
    m.stat("skipped", skipped);
    m.stat("fd_failures", failures.len());
    m.stat_f64("max_rel_err_exp_psi", worst.psi_rel);
    m.stat("worst_exp_psi_at", json!([worst.psi_at.0, worst.psi_at.1]));
    m.stat_f64("max_abs_err_cubic_form", worst.u_abs);
    m.stat("worst_cubic_form_at", json!([worst.u_at.0, worst.u_at.1]));
    m.stat("pass", pass);
    m.notes.extend(failures.iter().take(5).cloned());

    write_atomic(&a.obj, obj.text.as_bytes()).map_err(io_err(&a.obj))?;
    m.outputs.push(a.obj.display().to_string());
    m.outputs.push(report.display().to_string());
    m.write(&report).map_err(io_err(&report))?;
    if !pass {
        eprintln!(
            "invariant check failed: e^psi rel err {:e}, |U| err {:e}, tol {:e}",
            worst.psi_rel, worst.u_abs, a.tol
        );
    }
    Ok(pass)
}
