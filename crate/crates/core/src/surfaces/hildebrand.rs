//! Hildebrand's complete hyperbolic affine sphere in a conformal chart.

use crate::algebra::R3;
use crate::error::{Error, Result};

fn sinh_chart(x: f64) -> Result<f64> {
    let sh = (3f64.sqrt() * x).sinh();
    if !x.is_finite() || sh.abs() < 1e-12 {
        return Err(Error::CoordinateSingularity);
    }
    Ok(sh)
}

/// The chart as printed; its volume normalization corresponds to `H = -1`.
pub fn hildebrand_surface_printed(x: f64, y: f64) -> Result<R3> {
    let sh = sinh_chart(x)?;
    let k = 1.0 / (3f64.sqrt() * sh);
    Ok(R3([
        k * (sh * sh + 3.0 * y) * y.exp(),
        -k * (1.0 + sh * sh).sqrt() * (-2.0 * y).exp(),
        -k * y.exp(),
    ]))
}

/// The chart scaled to `H = -2`, so that `e^ψ` and `|U|` are the stated invariants.
pub fn hildebrand_surface(x: f64, y: f64) -> Result<R3> {
    Ok(hildebrand_surface_printed(x, y)? * 2f64.powf(-2.0 / 3.0))
}

/// `hildebrand_surface(x - shift, y)`.
pub fn hildebrand_surface_shifted(x: f64, y: f64, shift: f64) -> Result<R3> {
    hildebrand_surface(x - shift, y)
}

/// `s/(2√3)` with `s = ln((2√3-3)/(3+2√3))`, the shift aligning the chart with the dressed vacuum.
pub fn dressing_offset() -> f64 {
    let r3 = 3f64.sqrt();
    ((2.0 * r3 - 3.0) / (3.0 + 2.0 * r3)).ln() / (2.0 * r3)
}

/// `e^ψ = (3/2)(csch²(√3x) + 2/3)`.
pub fn hildebrand_exp_psi(x: f64) -> Result<f64> {
    let sh = sinh_chart(x)?;
    Ok(1.5 * (1.0 / (sh * sh) + 2.0 / 3.0))
}
