//! The vacuum solution `ψ = 0, U = 1, H = -2` and the base-surface interface.

use std::f64::consts::PI;

use crate::algebra::{real, Mat3C, Vec3C, C};
use crate::error::{Error, Result};
use crate::loopgroup::twist::{epsilon, p132, TwistSpec};

/// Immersion position and its first Wirtinger derivatives at one `(z, λ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PositionJet {
    pub r: Vec3C,
    pub r_z: Vec3C,
    pub r_zbar: Vec3C,
}

/// A seed surface whose extended frame and immersion are known in closed form.
pub trait BaseSurface: Sync {
    fn twist(&self) -> TwistSpec;

    fn mean_curvature(&self) -> f64 {
        self.twist().mean_curvature()
    }

    /// Extended frame normalized by `E(0, λ) = I`.
    fn frame(&self, z: C, lambda: C) -> Result<Mat3C>;

    /// Position `r` with `E(z, λ)·e₃ = 2r`, together with `r_z` and `r_z̄`.
    fn position(&self, z: C, lambda: C) -> Result<PositionJet>;

    /// Conformal factor `e^ψ` of the affine metric.
    fn exp_psi(&self, z: C) -> f64;
}

fn check_lambda(lambda: C) -> Result<()> {
    if lambda.norm() == 0.0 || !lambda.is_finite() {
        return Err(Error::ZeroLambda);
    }
    Ok(())
}

/// `R(λ) = exp(λz + z̄/λ)`.
fn r_exp(z: C, lambda: C) -> C {
    (lambda * z + z.conj() / lambda).exp()
}

/// `X = (√3/6)(R(λ), R(ε²λ), R(ε⁴λ))`.
pub fn vacuum_immersion(z: C, lambda: C) -> Result<Vec3C> {
    check_lambda(lambda)?;
    let e2 = epsilon().powi(2);
    let k = 3f64.sqrt() / 6.0;
    Ok(Vec3C::new(r_exp(z, lambda), r_exp(z, e2 * lambda), r_exp(z, e2 * e2 * lambda)) * k)
}

/// `∂_z X`, component-wise `(λ, ε²λ, ε⁴λ)·X`.
pub fn vacuum_immersion_z(z: C, lambda: C) -> Result<Vec3C> {
    let x = vacuum_immersion(z, lambda)?;
    let e2 = epsilon().powi(2);
    Ok(Vec3C::new(lambda * x[0], e2 * lambda * x[1], e2 * e2 * lambda * x[2]))
}

/// `∂_z̄ X`, component-wise `(1/λ, 1/(ε²λ), 1/(ε⁴λ))·X`.
pub fn vacuum_immersion_zbar(z: C, lambda: C) -> Result<Vec3C> {
    let x = vacuum_immersion(z, lambda)?;
    let e2 = epsilon().powi(2);
    Ok(Vec3C::new(x[0] / lambda, x[1] / (e2 * lambda), x[2] / (e2 * e2 * lambda)))
}

/// Unnormalized frame `F = (2X_z/λ, 2λX_z̄, 2X)`.
pub fn vacuum_f(z: C, lambda: C) -> Result<Mat3C> {
    let two = real(2.0);
    Ok(Mat3C::from_columns(
        vacuum_immersion_z(z, lambda)?.scale(two / lambda),
        vacuum_immersion_zbar(z, lambda)?.scale(two * lambda),
        vacuum_immersion(z, lambda)?.scale(two),
    ))
}

/// `exp(λz·P₁₃₂ + (z̄/λ)·P₁₃₂²)` through the spectral decomposition of `P₁₃₂`.
pub fn vacuum_frame(z: C, lambda: C) -> Result<Mat3C> {
    check_lambda(lambda)?;
    let omega = C::from_polar(1.0, 2.0 * PI / 3.0);
    let (a, b) = (lambda * z, z.conj() / lambda);
    let exps: Vec<C> = (0..3).map(|m| (a * omega.powi(m) + b * omega.powi(2 * m)).exp()).collect();
    let coef = |j: i32| -> C { (0..3).map(|m| omega.powi(-j * m) * exps[m as usize]).sum::<C>() / 3.0 };
    let p = p132();
    Ok(Mat3C::identity().scale(coef(0)) + p.scale(coef(1)) + (p * p).scale(coef(2)))
}

/// The same frame as `F(0, λ)⁻¹·F(z, λ)`.
pub fn vacuum_frame_via_f(z: C, lambda: C) -> Result<Mat3C> {
    Ok(vacuum_f(real(0.0), lambda)?.inverse()? * vacuum_f(z, lambda)?)
}

/// `E⁻¹∂_zE = λ·P₁₃₂`.
pub fn vacuum_connection_z(lambda: C) -> Mat3C {
    p132().scale(lambda)
}

/// The vacuum as a base surface.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Vacuum;

impl BaseSurface for Vacuum {
    fn twist(&self) -> TwistSpec {
        TwistSpec::Hyperbolic
    }

    fn frame(&self, z: C, lambda: C) -> Result<Mat3C> {
        vacuum_frame(z, lambda)
    }

    fn position(&self, z: C, lambda: C) -> Result<PositionJet> {
        let f0 = vacuum_f(real(0.0), lambda)?.inverse()?;
        Ok(PositionJet {
            r: f0 * vacuum_immersion(z, lambda)?,
            r_z: f0 * vacuum_immersion_z(z, lambda)?,
            r_zbar: f0 * vacuum_immersion_zbar(z, lambda)?,
        })
    }

    fn exp_psi(&self, _z: C) -> f64 {
        1.0
    }
}
