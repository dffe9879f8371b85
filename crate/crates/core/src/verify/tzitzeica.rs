//! Residual of the Tzitzéica equation in metric form.

use crate::algebra::C;
use crate::error::Result;
use crate::verify::fd::{wirtinger_jet, FdSettings};

/// `|h_zz̄·h - h_z·h_z̄ - h³ + 1|` at `z`.
pub fn tzitzeica_residual<F>(h: F, z: C, settings: FdSettings) -> Result<f64>
where
    F: Fn(C) -> Result<f64>,
{
    let value = h(z)?;
    let jet = wirtinger_jet(&h, z, settings)?;
    Ok((jet.f_zzbar * value - jet.f_z * jet.f_zbar - value.powi(3) + 1.0).norm())
}
