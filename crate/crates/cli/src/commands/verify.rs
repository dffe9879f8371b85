//! `verify`: Tzitzéica residual of a sampled metric.

use std::path::Path;

use serde_json::json;

use crate::manifest::RunManifest;
use crate::output::{parse_csv, CsvGrid};
use crate::{io_err, CliError, VerifyArgs};

/// Relative deviation tolerated between successive node spacings.
const SPACING_TOL: f64 = 1e-9;

fn spacing(v: &[f64], axis: &str) -> Result<f64, String> {
    let h = (v[v.len() - 1] - v[0]) / (v.len() - 1) as f64;
    if h.is_nan() || h <= 0.0 {
        return Err(format!("{axis} coordinates must increase"));
    }
    if v.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > SPACING_TOL * h.max(v[0].abs()).max(1.0)) {
        return Err(format!("{axis} spacing is not uniform"));
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Residuals {
    pub max: f64,
    pub argmax: Option<(usize, usize)>,
    pub evaluated: usize,
    /// Nodes whose stencil touches an inadmissible or missing value.
    pub masked: usize,
    pub boundary: usize,
}

/// `|h_zz̄·h - h_z·h_z̄ - h³ + 1|` with fourth-order differences taken along the grid.
pub fn grid_residuals(g: &CsvGrid) -> Result<Residuals, String> {
    let (nx, ny) = (g.nx(), g.ny());
    let dx = spacing(&g.xs, "x")?;
    let dy = spacing(&g.ys, "y")?;
    let mut r = Residuals { max: 0.0, argmax: None, evaluated: 0, masked: 0, boundary: 0 };
    for j in 0..ny {
        for i in 0..nx {
            if i < 2 || j < 2 || i + 2 >= nx || j + 2 >= ny {
                r.boundary += 1;
                continue;
            }
            let offsets = [-2i64, -1, 0, 1, 2];
            let ok = offsets.iter().all(|&o| {
                g.usable((i as i64 + o) as usize, j) && g.usable(i, (j as i64 + o) as usize)
            });
            if !ok {
                r.masked += 1;
                continue;
            }
            let fx = |o: i64| g.at((i as i64 + o) as usize, j);
            let fy = |o: i64| g.at(i, (j as i64 + o) as usize);
            let h = g.at(i, j);
            let d1 = |f: &dyn Fn(i64) -> f64, s: f64| (8.0 * (f(1) - f(-1)) - (f(2) - f(-2))) / (12.0 * s);
            let d2 = |f: &dyn Fn(i64) -> f64, s: f64| {
                (16.0 * (f(1) - h + f(-1) - h) - (f(2) - h + f(-2) - h)) / (12.0 * s * s)
            };
            let (hx, hy) = (d1(&fx, dx), d1(&fy, dy));
            let lap = d2(&fx, dx) + d2(&fy, dy);
            let res = (lap * h / 4.0 - (hx * hx + hy * hy) / 4.0 - h.powi(3) + 1.0).abs();
            r.evaluated += 1;
            if res > r.max || r.argmax.is_none() {
                r.max = res;
                r.argmax = Some((i, j));
            }
        }
    }
    Ok(r)
}

pub fn verify(a: &VerifyArgs, argv: &[String]) -> Result<bool, CliError> {
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(CliError::Param("--tol must be positive".into()));
    }
    let text = std::fs::read_to_string(&a.input).map_err(io_err(&a.input))?;
    let grid = parse_csv(&text).map_err(|e| CliError::Io(format!("{}: {e}", a.input.display())))?;
    let r = grid_residuals(&grid).map_err(|e| CliError::Io(format!("{}: {e}", a.input.display())))?;
    let pass = r.evaluated > 0 && r.max <= a.tol;

    let out = a.out.clone().unwrap_or_else(|| a.input.with_extension("report.json"));
    let mut m = RunManifest::new("verify", argv);
    m.param("input", a.input.display().to_string());
    m.grid = Some(format!(
        "{}:{}:{}x{}:{}:{}",
        grid.xs[0],
        grid.xs[grid.nx() - 1],
        grid.nx(),
        grid.ys[0],
        grid.ys[grid.ny() - 1],
        grid.ny()
    ));
    m.tolerances.insert("tol".into(), a.tol);
    m.stat_f64("max_residual", r.max);
    if let Some((i, j)) = r.argmax {
        m.stat("argmax", json!({ "i": i, "j": j, "x": grid.xs[i], "y": grid.ys[j] }));
    }
    m.stat("evaluated", r.evaluated);
    m.stat("masked", r.masked);
    m.stat("boundary", r.boundary);
    m.stat("pass", pass);
    if r.evaluated == 0 {
        m.notes.push("no node has a complete stencil".into());
    }
    m.outputs.push(out.display().to_string());
    m.write(&out).map_err(io_err(Path::new(&out)))?;
    if !pass {
        eprintln!("verification failed: max residual {:e} > tol {:e}", r.max, a.tol);
    }
    Ok(pass)
}
