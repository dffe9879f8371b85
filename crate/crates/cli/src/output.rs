//! Atomic file writers and the CSV/OBJ formats.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use loopdress::dressing::{MetricGrid, NodeStatus};
use loopdress::{GridSpec, SurfaceGrid};

pub const CSV_HEADER: &str = "x,y,h,admissible";

/// Writes `contents` to a sibling temporary file and renames it over `path`.
pub fn write_atomic(path: &Path, contents: &[u8]) -> io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

/// Seventeen significant digits; reparses to the same bits.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// One row per node, x running fastest. Failed nodes carry `NaN`.
pub fn metric_csv(m: &MetricGrid) -> String {
    let spec = m.h.spec();
    let mut out = String::with_capacity(spec.len() * 80);
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (k, (i, j)) in spec.nodes().enumerate() {
        let (h, flag) = match m.status[k] {
            NodeStatus::Admissible => (m.h.get(i, j).re, 1),
            NodeStatus::Negative => (m.h.get(i, j).re, 0),
            NodeStatus::Failed => (f64::NAN, 0),
        };
        let _ = writeln!(out, "{},{},{},{}", fmt_f64(spec.x(i)), fmt_f64(spec.y(j)), fmt_f64(h), flag);
    }
    out
}

/// Mesh of the usable nodes; a quad is emitted only when all four corners are usable.
pub struct Obj {
    pub text: String,
    pub vertices: usize,
    pub faces: usize,
}

pub fn surface_obj(surface: &SurfaceGrid, usable: impl Fn(usize) -> bool) -> Obj {
    let spec: &GridSpec = surface.spec();
    let mut index = vec![0usize; spec.len()];
    let mut text = String::new();
    let mut vertices = 0;
    for (k, p) in surface.points().iter().enumerate() {
        if let Some(p) = p.filter(|p| p.is_finite() && usable(k)) {
            vertices += 1;
            index[k] = vertices;
            let _ = writeln!(text, "v {} {} {}", fmt_f64(p[0]), fmt_f64(p[1]), fmt_f64(p[2]));
        }
    }
    let mut faces = 0;
    for j in 0..spec.ny() - 1 {
        for i in 0..spec.nx() - 1 {
            let quad = [spec.index(i, j), spec.index(i + 1, j), spec.index(i + 1, j + 1), spec.index(i, j + 1)];
            if quad.iter().all(|&k| index[k] > 0) {
                faces += 1;
                let _ = writeln!(text, "f {} {} {} {}", index[quad[0]], index[quad[1]], index[quad[2]], index[quad[3]]);
            }
        }
    }
    Obj { text, vertices, faces }
}

/// A metric grid read back from CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct CsvGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    /// Row-major, x fastest.
    pub h: Vec<f64>,
    pub admissible: Vec<bool>,
}

impl CsvGrid {
    pub fn nx(&self) -> usize {
        self.xs.len()
    }

    pub fn ny(&self) -> usize {
        self.ys.len()
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.h[j * self.nx() + i]
    }

    pub fn usable(&self, i: usize, j: usize) -> bool {
        let k = j * self.nx() + i;
        self.admissible[k] && self.h[k].is_finite()
    }
}

pub fn parse_csv(text: &str) -> Result<CsvGrid, String> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    match lines.next() {
        Some((_, h)) if h.trim() == CSV_HEADER => {}
        _ => return Err(format!("missing header {CSV_HEADER:?}")),
    }
    let mut rows = Vec::new();
    for (n, line) in lines {
        let f: Vec<&str> = line.split(',').map(str::trim).collect();
        if f.len() != 4 {
            return Err(format!("line {}: expected 4 fields", n + 1));
        }
        let num = |t: &str| t.parse::<f64>().map_err(|_| format!("line {}: bad number {t:?}", n + 1));
        let flag = match f[3] {
            "1" | "true" => true,
            "0" | "false" => false,
            t => return Err(format!("line {}: bad admissible flag {t:?}", n + 1)),
        };
        rows.push((num(f[0])?, num(f[1])?, num(f[2])?, flag));
    }
    if rows.is_empty() {
        return Err("no data rows".into());
    }
    let y0 = rows[0].1;
    let nx = rows.iter().take_while(|r| r.1 == y0).count();
    if nx < 2 || rows.len() % nx != 0 {
        return Err("rows do not form a rectangular grid".into());
    }
    let ny = rows.len() / nx;
    let xs: Vec<f64> = rows[..nx].iter().map(|r| r.0).collect();
    let ys: Vec<f64> = (0..ny).map(|j| rows[j * nx].1).collect();
    for (k, r) in rows.iter().enumerate() {
        if r.0 != xs[k % nx] || r.1 != ys[k / nx] {
            return Err(format!("row {} breaks the x-fastest node order", k + 1));
        }
    }
    Ok(CsvGrid {
        xs,
        ys,
        h: rows.iter().map(|r| r.2).collect(),
        admissible: rows.iter().map(|r| r.3).collect(),
    })
}
