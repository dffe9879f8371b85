//! Affine metric and cubic form of a sampled immersion.

use crate::algebra::{det3, Mat3C, C, R3};
use crate::error::{Error, Result};
use crate::verify::fd::{wirtinger_jet, FdSettings};

/// Smallest `|4·det(r_z, r_z̄, r_zz̄)|` accepted as a nondegenerate immersion.
pub const JACOBIAN_TOL: f64 = 1e-12;

/// Conformal factor `ψ`, cubic coefficient `U` and failure of conformality at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineInvariants {
    pub psi: f64,
    pub u: C,
    pub conformal_residual: f64,
}

impl AffineInvariants {
    pub fn exp_psi(&self) -> f64 {
        self.psi.exp()
    }
}

/// Extracts the invariants from `det(r_z, r_z̄, r_zz̄) = (i/4)e^{2ψ}` and
/// `det(r_z, r_zz, r_zzz) = (i/4)U²`, taking the root of `U²` with nonnegative real part.
pub fn affine_invariants_fd<F>(immersion: F, z: C, settings: FdSettings) -> Result<AffineInvariants>
where
    F: Fn(f64, f64) -> Result<R3>,
{
    let jet = wirtinger_jet(|w: C| immersion(w.re, w.im), z, settings)?;
    let first = det3(&Mat3C::from_columns(jet.f_z, jet.f_zbar, jet.f_zzbar));
    let e2psi = (first * 4.0).norm();
    if e2psi.is_nan() || e2psi < JACOBIAN_TOL {
        return Err(Error::DegenerateJacobian { det: first.norm() });
    }
    let second = det3(&Mat3C::from_columns(jet.f_z, jet.f_zz, jet.f_zzz));
    let u = (second * C::new(0.0, -4.0)).sqrt();
    let conformal_residual = det3(&Mat3C::from_columns(jet.f_z, jet.f_zbar, jet.f_zz)).norm();
    Ok(AffineInvariants { psi: 0.5 * e2psi.ln(), u, conformal_residual })
}
