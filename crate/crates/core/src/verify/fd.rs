//! Central finite differences in the z-plane and their Wirtinger combinations.

use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};

use crate::algebra::{c, real, Vec3C, C, R3};
use crate::error::{Error, Result};

/// Step and extrapolation choice for the difference stencils.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FdSettings {
    step: f64,
    richardson: bool,
}

impl FdSettings {
    pub const MIN_STEP: f64 = 1e-6;
    pub const MAX_STEP: f64 = 1e-2;

    pub fn new(step: f64, richardson: bool) -> Result<Self> {
        if !(Self::MIN_STEP..=Self::MAX_STEP).contains(&step) {
            return Err(Error::InvalidParameter(format!("finite-difference step {step} outside [1e-6, 1e-2]")));
        }
        Ok(FdSettings { step, richardson })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn richardson(&self) -> bool {
        self.richardson
    }
}

impl Default for FdSettings {
    fn default() -> Self {
        FdSettings { step: 1e-4, richardson: false }
    }
}

/// Values that can be differenced and then combined with complex weights.
pub trait FieldValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + Send {
    type Complex: Copy + Add<Output = Self::Complex> + Sub<Output = Self::Complex> + Mul<C, Output = Self::Complex>;

    fn complexify(self) -> Self::Complex;
}

impl FieldValue for f64 {
    type Complex = C;

    fn complexify(self) -> C {
        real(self)
    }
}

impl FieldValue for C {
    type Complex = C;

    fn complexify(self) -> C {
        self
    }
}

impl FieldValue for R3 {
    type Complex = Vec3C;

    fn complexify(self) -> Vec3C {
        Vec3C::from_real(self.0)
    }
}

/// Real partial derivatives up to third order.
#[derive(Clone, Copy, Debug)]
pub struct Partials<V> {
    pub fx: V,
    pub fy: V,
    pub fxx: V,
    pub fxy: V,
    pub fyy: V,
    pub fxxx: V,
    pub fxxy: V,
    pub fxyy: V,
    pub fyyy: V,
}

impl<V: FieldValue> Partials<V> {
    fn combine(self, other: Self, a: f64, b: f64) -> Self {
        let m = |p: V, q: V| p * a + q * b;
        Partials {
            fx: m(self.fx, other.fx),
            fy: m(self.fy, other.fy),
            fxx: m(self.fxx, other.fxx),
            fxy: m(self.fxy, other.fxy),
            fyy: m(self.fyy, other.fyy),
            fxxx: m(self.fxxx, other.fxxx),
            fxxy: m(self.fxxy, other.fxxy),
            fxyy: m(self.fxyy, other.fxyy),
            fyyy: m(self.fyyy, other.fyyy),
        }
    }
}

const D0: &[(i32, f64)] = &[(0, 1.0)];
const D1: &[(i32, f64)] = &[(-2, 1.0 / 12.0), (-1, -8.0 / 12.0), (1, 8.0 / 12.0), (2, -1.0 / 12.0)];
const D2: &[(i32, f64)] = &[(-2, -1.0 / 12.0), (-1, 16.0 / 12.0), (0, -30.0 / 12.0), (1, 16.0 / 12.0), (2, -1.0 / 12.0)];
const D3: &[(i32, f64)] = &[(-3, 0.125), (-2, -1.0), (-1, 1.625), (1, -1.625), (2, 1.0), (3, -0.125)];

/// Fourth-order central stencils, applied as tensor products of one-dimensional weights.
/// Every product stencil has zero weight sum, so values are taken relative to `f(z)`.
fn stencil<V, F>(f: &F, z: C, h: f64) -> Result<Partials<V>>
where
    V: FieldValue,
    F: Fn(C) -> Result<V>,
{
    let center = f(z)?;
    let mut cache: HashMap<(i32, i32), V> = HashMap::from([((0, 0), center)]);
    let mut apply = |wx: &[(i32, f64)], wy: &[(i32, f64)], order: i32| -> Result<V> {
        let mut acc: Option<V> = None;
        for &(i, a) in wx {
            for &(j, b) in wy {
                let v = match cache.get(&(i, j)) {
                    Some(v) => *v,
                    None => {
                        let v = f(z + c(f64::from(i) * h, f64::from(j) * h))?;
                        cache.insert((i, j), v);
                        v
                    }
                };
                let term = (v - center) * (a * b);
                acc = Some(match acc {
                    Some(s) => s + term,
                    None => term,
                });
            }
        }
        Ok(acc.expect("non-empty stencil") * h.powi(-order))
    };
    Ok(Partials {
        fx: apply(D1, D0, 1)?,
        fy: apply(D0, D1, 1)?,
        fxx: apply(D2, D0, 2)?,
        fxy: apply(D1, D1, 2)?,
        fyy: apply(D0, D2, 2)?,
        fxxx: apply(D3, D0, 3)?,
        fxxy: apply(D2, D1, 3)?,
        fxyy: apply(D1, D2, 3)?,
        fyyy: apply(D0, D3, 3)?,
    })
}

/// Partial derivatives of `f` at `z`, Richardson-extrapolated when requested.
pub fn partials<V, F>(f: F, z: C, settings: FdSettings) -> Result<Partials<V>>
where
    V: FieldValue,
    F: Fn(C) -> Result<V>,
{
    let coarse = stencil(&f, z, settings.step)?;
    if !settings.richardson {
        return Ok(coarse);
    }
    let fine = stencil(&f, z, settings.step / 2.0)?;
    Ok(fine.combine(coarse, 16.0 / 15.0, -1.0 / 15.0))
}

/// Wirtinger derivatives `∂_z = ½(∂_x - i∂_y)`, `∂_z̄ = ½(∂_x + i∂_y)`.
#[derive(Clone, Copy, Debug)]
pub struct WirtingerJet<W> {
    pub f_z: W,
    pub f_zbar: W,
    pub f_zz: W,
    pub f_zzbar: W,
    pub f_zzz: W,
}

pub fn wirtinger_jet<V, F>(f: F, z: C, settings: FdSettings) -> Result<WirtingerJet<V::Complex>>
where
    V: FieldValue,
    F: Fn(C) -> Result<V>,
{
    let p = partials(f, z, settings)?;
    let i = c(0.0, 1.0);
    let k = |v: V| v.complexify();
    Ok(WirtingerJet {
        f_z: (k(p.fx) - k(p.fy) * i) * real(0.5),
        f_zbar: (k(p.fx) + k(p.fy) * i) * real(0.5),
        f_zz: (k(p.fxx) - k(p.fxy) * real(2.0) * i - k(p.fyy)) * real(0.25),
        f_zzbar: (k(p.fxx) + k(p.fyy)) * real(0.25),
        f_zzz: (k(p.fxxx) - k(p.fxxy) * real(3.0) * i - k(p.fxyy) * real(3.0) + k(p.fyyy) * i) * real(0.125),
    })
}

/// `(f_z, f_z̄, f_zz̄)` of a complex scalar function.
pub fn wirtinger<F>(f: F, z: C, settings: FdSettings) -> (C, C, C)
where
    F: Fn(C) -> C,
{
    let jet = wirtinger_jet(|w| Ok(f(w)), z, settings).expect("infallible closure");
    (jet.f_z, jet.f_zbar, jet.f_zzbar)
}
