//! Conversion of complex frame columns to points of ℝ³.

use crate::algebra::{c, real, Vec3C, C, R3};
use crate::loopgroup::twist::TwistSpec;

/// Scalar fixing orientation and the equiaffine volume of the real image.
pub fn volume_scale(spec: TwistSpec) -> C {
    let k = 2f64.cbrt();
    match spec {
        TwistSpec::Hyperbolic => real(-k),
        TwistSpec::Elliptic => c(0.0, k),
    }
}

/// `Re(c_H·N·col) / (-H)` for the third column `col` of a frame.
pub fn real_immersion(col: &Vec3C, spec: TwistSpec) -> R3 {
    let h = spec.mean_curvature();
    let v = (spec.n_matrix() * *col).scale(volume_scale(spec));
    v.re() * (-1.0 / h)
}
