//! Rectangular sampling lattices in the z-plane and fields attached to them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{C, R3};
use crate::error::{Error, Result};

/// Uniform `nx × ny` lattice over `[x_min, x_max] × [y_min, y_max]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    x_min: f64,
    x_max: f64,
    nx: usize,
    y_min: f64,
    y_max: f64,
    ny: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, nx: usize, y_min: f64, y_max: f64, ny: usize) -> Result<Self> {
        if ![x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidGrid("bounds must be finite".into()));
        }
        if x_min >= x_max || y_min >= y_max {
            return Err(Error::InvalidGrid("bounds must be increasing".into()));
        }
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidGrid("at least two nodes per axis".into()));
        }
        Ok(GridSpec { x_min, x_max, nx, y_min, y_max, ny })
    }

    /// Square lattice `[lo, hi]²` with `n` nodes per axis.
    pub fn square(lo: f64, hi: f64, n: usize) -> Result<Self> {
        Self::new(lo, hi, n, lo, hi, n)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn x_range(&self) -> (f64, f64) {
        (self.x_min, self.x_max)
    }

    pub fn y_range(&self) -> (f64, f64) {
        (self.y_min, self.y_max)
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x(&self, i: usize) -> f64 {
        self.x_min + (self.x_max - self.x_min) * i as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        self.y_min + (self.y_max - self.y_min) * j as f64 / (self.ny - 1) as f64
    }

    pub fn z(&self, i: usize, j: usize) -> C {
        C::new(self.x(i), self.y(j))
    }

    /// Flat index of node `(i, j)`; rows run over x for fixed y.
    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn node(&self, k: usize) -> (usize, usize) {
        (k % self.nx, k / self.nx)
    }

    pub fn is_interior(&self, i: usize, j: usize) -> bool {
        i > 0 && j > 0 && i + 1 < self.nx && j + 1 < self.ny
    }

    /// Whether the closed x-range contains the line `x = 0`.
    pub fn straddles_x_zero(&self) -> bool {
        self.x_min <= 0.0 && self.x_max >= 0.0
    }

    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.len()).map(move |k| self.node(k))
    }
}

/// Parses `xmin:xmax:nx x ymin:ymax:ny` (the separator `x` may carry spaces).
impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGrid(format!("expected xmin:xmax:nx x ymin:ymax:ny, got {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let axes: Vec<&str> = compact.splitn(2, ['x', 'X']).collect();
        let (first, second) = match axes.as_slice() {
            [a, b] => (*a, *b),
            _ => return Err(bad()),
        };
        let axis = |t: &str| -> Result<(f64, f64, usize)> {
            let parts: Vec<&str> = t.split(':').collect();
            if parts.len() != 3 {
                return Err(bad());
            }
            let lo = parts[0].parse::<f64>().map_err(|_| bad())?;
            let hi = parts[1].parse::<f64>().map_err(|_| bad())?;
            let n = parts[2].parse::<usize>().map_err(|_| bad())?;
            Ok((lo, hi, n))
        };
        let (x0, x1, nx) = axis(first)?;
        let (y0, y1, ny) = axis(second)?;
        GridSpec::new(x0, x1, nx, y0, y1, ny)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}x{}:{}:{}",
            self.x_min, self.x_max, self.nx, self.y_min, self.y_max, self.ny
        )
    }
}

/// Complex samples on a lattice; real fields keep a zero imaginary part.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarGrid {
    spec: GridSpec,
    values: Vec<C>,
}

impl ScalarGrid {
    pub fn new(spec: GridSpec, values: Vec<C>) -> Result<Self> {
        if values.len() != spec.len() {
            return Err(Error::SpecMismatch);
        }
        Ok(ScalarGrid { spec, values })
    }

    /// Samples `f` at every node in parallel.
    pub fn from_fn<F>(spec: GridSpec, f: F) -> Self
    where
        F: Fn(C) -> C + Sync,
    {
        let values = (0..spec.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = spec.node(k);
                f(spec.z(i, j))
            })
            .collect();
        ScalarGrid { spec, values }
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn values(&self) -> &[C] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> C {
        self.values[self.spec.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C) {
        let k = self.spec.index(i, j);
        self.values[k] = v;
    }

    pub fn map(&self, f: impl Fn(C) -> C) -> ScalarGrid {
        ScalarGrid { spec: self.spec, values: self.values.iter().map(|v| f(*v)).collect() }
    }
}

/// Real immersion samples on a lattice; `None` marks nodes where evaluation failed.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceGrid {
    spec: GridSpec,
    points: Vec<Option<R3>>,
}

impl SurfaceGrid {
    pub fn new(spec: GridSpec, points: Vec<Option<R3>>) -> Result<Self> {
        if points.len() != spec.len() {
            return Err(Error::SpecMismatch);
        }
        Ok(SurfaceGrid { spec, points })
    }

    /// Samples `f` at every node in parallel, keeping failures as gaps.
    pub fn from_fn<F>(spec: GridSpec, f: F) -> Self
    where
        F: Fn(C) -> Result<R3> + Sync,
    {
        let points = (0..spec.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = spec.node(k);
                f(spec.z(i, j)).ok().filter(|p| p.is_finite())
            })
            .collect();
        SurfaceGrid { spec, points }
    }

    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }

    pub fn points(&self) -> &[Option<R3>] {
        &self.points
    }

    pub fn get(&self, i: usize, j: usize) -> Option<R3> {
        self.points[self.spec.index(i, j)]
    }

    pub fn missing(&self) -> usize {
        self.points.iter().filter(|p| p.is_none()).count()
    }
}
