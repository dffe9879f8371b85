//! Complex scalars, 3×3 complex matrices and 3-vectors.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C = Complex64;

/// The imaginary unit.
pub const IM: C = C::new(0.0, 1.0);

/// Relative determinant floor below which [`inv3`] reports a singular matrix.
pub const SINGULAR_TOL: f64 = 1e-12;

/// Relative size of the third coordinate below which a line is treated as lying at infinity.
pub const INFINITY_TOL: f64 = 1e-12;

pub fn c(re: f64, im: f64) -> C {
    C::new(re, im)
}

pub fn real(re: f64) -> C {
    C::new(re, 0.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat3C(pub [[C; 3]; 3]);

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3C(pub [C; 3]);

/// A point or vector of real 3-space.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct R3(pub [f64; 3]);

impl Mat3C {
    pub fn zeros() -> Self {
        Mat3C([[C::new(0.0, 0.0); 3]; 3])
    }

    pub fn identity() -> Self {
        Self::diag(real(1.0), real(1.0), real(1.0))
    }

    pub fn diag(a: C, b: C, c: C) -> Self {
        let mut m = Self::zeros();
        m.0[0][0] = a;
        m.0[1][1] = b;
        m.0[2][2] = c;
        m
    }

    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        Mat3C(rows.map(|row| row.map(real)))
    }

    pub fn from_columns(a: Vec3C, b: Vec3C, c: Vec3C) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            m.0[i][0] = a.0[i];
            m.0[i][1] = b.0[i];
            m.0[i][2] = c.0[i];
        }
        m
    }

    pub fn column(&self, j: usize) -> Vec3C {
        Vec3C([self.0[0][j], self.0[1][j], self.0[2][j]])
    }

    pub fn row(&self, i: usize) -> Vec3C {
        Vec3C(self.0[i])
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[j][i];
            }
        }
        m
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(C) -> C) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for z in row.iter_mut() {
                *z = f(*z);
            }
        }
        m
    }

    pub fn scale(&self, s: C) -> Self {
        self.map(|z| z * s)
    }

    pub fn trace(&self) -> C {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0
            .iter()
            .flat_map(|r| r.iter())
            .fold(0.0, |m, z| m.max(z.norm()))
    }

    /// Largest entry modulus of `self - other`.
    pub fn dist(&self, other: &Mat3C) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flat_map(|r| r.iter()).all(|z| z.is_finite())
    }

    pub fn det(&self) -> C {
        det3(self)
    }

    pub fn inverse(&self) -> Result<Mat3C> {
        inv3(self)
    }
}

impl Index<(usize, usize)> for Mat3C {
    type Output = C;
    fn index(&self, (i, j): (usize, usize)) -> &C {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat3C {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C {
        &mut self.0[i][j]
    }
}

impl Add for Mat3C {
    type Output = Mat3C;
    fn add(self, rhs: Mat3C) -> Mat3C {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] += rhs.0[i][j];
            }
        }
        m
    }
}

impl Sub for Mat3C {
    type Output = Mat3C;
    fn sub(self, rhs: Mat3C) -> Mat3C {
        let mut m = self;
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] -= rhs.0[i][j];
            }
        }
        m
    }
}

impl Neg for Mat3C {
    type Output = Mat3C;
    fn neg(self) -> Mat3C {
        self.map(|z| -z)
    }
}

impl Mul for Mat3C {
    type Output = Mat3C;
    fn mul(self, rhs: Mat3C) -> Mat3C {
        let mut m = Mat3C::zeros();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = self.0[i][0] * rhs.0[0][j]
                    + self.0[i][1] * rhs.0[1][j]
                    + self.0[i][2] * rhs.0[2][j];
            }
        }
        m
    }
}

impl Mul<Vec3C> for Mat3C {
    type Output = Vec3C;
    fn mul(self, v: Vec3C) -> Vec3C {
        let mut out = Vec3C::zeros();
        for i in 0..3 {
            out.0[i] = self.0[i][0] * v.0[0] + self.0[i][1] * v.0[1] + self.0[i][2] * v.0[2];
        }
        out
    }
}

impl Mul<C> for Mat3C {
    type Output = Mat3C;
    fn mul(self, s: C) -> Mat3C {
        self.scale(s)
    }
}

impl Vec3C {
    pub fn new(a: C, b: C, c: C) -> Self {
        Vec3C([a, b, c])
    }

    pub fn zeros() -> Self {
        Vec3C([C::new(0.0, 0.0); 3])
    }

    pub fn from_real(v: [f64; 3]) -> Self {
        Vec3C([real(v[0]), real(v[1]), real(v[2])])
    }

    /// Row-vector product `self · m`.
    pub fn times(&self, m: &Mat3C) -> Vec3C {
        let mut out = Vec3C::zeros();
        for j in 0..3 {
            out.0[j] = self.0[0] * m.0[0][j] + self.0[1] * m.0[1][j] + self.0[2] * m.0[2][j];
        }
        out
    }

    /// Bilinear pairing without conjugation.
    pub fn dot(&self, other: &Vec3C) -> C {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn conj(&self) -> Vec3C {
        Vec3C([self.0[0].conj(), self.0[1].conj(), self.0[2].conj()])
    }

    pub fn scale(&self, s: C) -> Vec3C {
        Vec3C([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn re(&self) -> R3 {
        R3([self.0[0].re, self.0[1].re, self.0[2].re])
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    pub fn dist(&self, other: &Vec3C) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|z| z.is_finite())
    }
}

impl Index<usize> for Vec3C {
    type Output = C;
    fn index(&self, i: usize) -> &C {
        &self.0[i]
    }
}

impl Add for Vec3C {
    type Output = Vec3C;
    fn add(self, o: Vec3C) -> Vec3C {
        Vec3C([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for Vec3C {
    type Output = Vec3C;
    fn sub(self, o: Vec3C) -> Vec3C {
        Vec3C([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Mul<C> for Vec3C {
    type Output = Vec3C;
    fn mul(self, s: C) -> Vec3C {
        self.scale(s)
    }
}

impl Mul<f64> for Vec3C {
    type Output = Vec3C;
    fn mul(self, s: f64) -> Vec3C {
        self.scale(real(s))
    }
}

impl R3 {
    pub fn norm_inf(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }
}

impl Index<usize> for R3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl Add for R3 {
    type Output = R3;
    fn add(self, o: R3) -> R3 {
        R3([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }
}

impl Sub for R3 {
    type Output = R3;
    fn sub(self, o: R3) -> R3 {
        R3([self.0[0] - o.0[0], self.0[1] - o.0[1], self.0[2] - o.0[2]])
    }
}

impl Mul<f64> for R3 {
    type Output = R3;
    fn mul(self, s: f64) -> R3 {
        R3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }
}

/// Cofactor-expansion determinant.
pub fn det3(m: &Mat3C) -> C {
    let a = &m.0;
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Adjugate inverse, rejecting matrices whose determinant is negligible
/// relative to the cube of the largest entry.
pub fn inv3(m: &Mat3C) -> Result<Mat3C> {
    let det = det3(m);
    let scale = m.max_abs();
    if !det.is_finite() || det.norm() < SINGULAR_TOL * scale.powi(3) || det.norm() == 0.0 {
        return Err(Error::SingularMatrix { det: det.norm() });
    }
    let a = &m.0;
    let cof = |i0: usize, i1: usize, j0: usize, j1: usize| a[i0][j0] * a[i1][j1] - a[i0][j1] * a[i1][j0];
    let adj = Mat3C([
        [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
        [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
        [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
    ]);
    Ok(adj.scale(det.inv()))
}

/// Scales `v` so that its last coordinate is one and returns the first two.
pub fn solve_line_normalize(v: &Vec3C) -> Result<(C, C)> {
    let scale = v.max_abs();
    if !v.is_finite() || scale == 0.0 || v.0[2].norm() < INFINITY_TOL * scale {
        return Err(Error::LineAtInfinity);
    }
    Ok((v.0[0] / v.0[2], v.0[1] / v.0[2]))
}
