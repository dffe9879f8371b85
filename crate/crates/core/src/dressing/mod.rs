//! Dressing actions of simple and six-pole elements on base frames.

pub mod six;
pub mod three;

pub use six::{Dress6Result, SixPoleDressing};
pub use three::{transport_line3, Dress3Result, MetricGrid, NodeStatus, ThreePoleDressing};

use crate::algebra::{real, Vec3C, C};
use crate::error::{Error, Result};

/// Radius of the averaging circle relative to `|λ|`.
const LIMIT_RADIUS: f64 = 1e-2;
const LIMIT_NODES: usize = 16;
/// Orders of the principal part that must vanish.
const LIMIT_ORDERS: i32 = 4;
/// Largest principal-part coefficient, relative to the sampled values.
const LIMIT_TOL: f64 = 1e-9;

/// Value at `λ` of a map holomorphic near `λ` except for a removable singularity there,
/// as the mean over a small circle. Fails when the principal part does not vanish.
pub fn removable_limit<F>(f: F, lambda: C) -> Result<Vec3C>
where
    F: Fn(C) -> Result<Vec3C>,
{
    let r = LIMIT_RADIUS * lambda.norm().max(f64::MIN_POSITIVE);
    let mut moments = vec![Vec3C::zeros(); LIMIT_ORDERS as usize + 1];
    let mut size: f64 = 0.0;
    for k in 0..LIMIT_NODES {
        let u = C::from_polar(1.0, std::f64::consts::TAU * (k as f64 + 0.5) / LIMIT_NODES as f64);
        let v = f(lambda + u.scale(r))?;
        size = size.max(v.max_abs());
        for (m, acc) in moments.iter_mut().enumerate() {
            *acc = *acc + v.scale(u.powi(m as i32));
        }
    }
    let n = real(1.0 / LIMIT_NODES as f64);
    if moments[1..].iter().any(|m| m.scale(n).max_abs() > LIMIT_TOL * size) {
        return Err(Error::DenominatorPole);
    }
    Ok(moments[0].scale(n))
}
