//! Check that a frame's connection form is affine in the loop parameter.

use crate::algebra::{c, real, Mat3C, C};
use crate::error::{Error, Result};

/// `E⁻¹∂_zE` at `(z, λ)` by fourth-order central differences.
pub fn connection_z<F>(frame: &F, z: C, lambda: C, step: f64) -> Result<Mat3C>
where
    F: Fn(C, C) -> Result<Mat3C>,
{
    let along = |dir: C| -> Result<Mat3C> {
        let at = |k: f64| frame(z + dir * (k * step), lambda);
        let near = at(1.0)? - at(-1.0)?;
        let far = at(2.0)? - at(-2.0)?;
        Ok((near.scale(real(8.0)) - far).scale(real(1.0 / (12.0 * step))))
    };
    let dx = along(c(1.0, 0.0))?;
    let dy = along(c(0.0, 1.0))?;
    let ez = (dx - dy.scale(c(0.0, 1.0))).scale(real(0.5));
    Ok(frame(z, lambda)?.inverse()? * ez)
}

/// Largest entry residual of the least-squares fit `E⁻¹∂_zE ≈ c₀ + c₁λ` over `lambdas`.
pub fn lambda_linearity_residual<F>(frame: F, z: C, lambdas: &[C], step: f64) -> Result<f64>
where
    F: Fn(C, C) -> Result<Mat3C>,
{
    if lambdas.len() < 3 {
        return Err(Error::InvalidParameter("need at least three loop parameters".into()));
    }
    let forms = lambdas.iter().map(|&l| connection_z(&frame, z, l, step)).collect::<Result<Vec<_>>>()?;
    let n = real(lambdas.len() as f64);
    let s1: C = lambdas.iter().sum();
    let s2: f64 = lambdas.iter().map(|l| l.norm_sqr()).sum();
    let det = n * s2 - s1 * s1.conj();
    if det.norm() < 1e-14 {
        return Err(Error::InvalidParameter("loop parameters must be distinct".into()));
    }
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let ya: C = forms.iter().map(|f| f[(i, j)]).sum();
            let yb: C = lambdas.iter().zip(&forms).map(|(l, f)| l.conj() * f[(i, j)]).sum();
            let c0 = (real(s2) * ya - s1 * yb) / det;
            let c1 = (n * yb - s1.conj() * ya) / det;
            for (l, f) in lambdas.iter().zip(&forms) {
                worst = worst.max((f[(i, j)] - c0 - c1 * l).norm());
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::vacuum::vacuum_frame;

    #[test]
    fn vacuum_connection_is_linear() {
        let ls = [C::from_polar(1.0, 0.2), C::from_polar(1.0, 1.7), C::from_polar(1.0, 3.0), C::from_polar(1.0, -2.1)];
        let r = lambda_linearity_residual(vacuum_frame, c(0.3, 0.4), &ls, 1e-5).unwrap();
        assert!(r < 1e-8, "{r}");
    }

    #[test]
    fn quadratic_dependence_is_detected() {
        let frame = |z: C, l: C| Ok(Mat3C::diag((z * l * l).exp(), (-z * l * l).exp(), real(1.0)));
        let ls = [C::from_polar(1.0, 0.2), C::from_polar(1.0, 1.7), C::from_polar(1.0, 3.0), C::from_polar(1.0, -2.1)];
        assert!(lambda_linearity_residual(frame, c(0.3, 0.4), &ls, 1e-5).unwrap() > 0.1);
    }
}
