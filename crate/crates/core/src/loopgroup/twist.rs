//! Structure matrices and the two twisting automorphisms.

use std::f64::consts::PI;

use crate::algebra::{c, real, Mat3C, C};
use crate::error::{Error, Result};

/// `e^{iπ/3}`, a primitive sixth root of unity.
pub fn epsilon() -> C {
    C::from_polar(1.0, PI / 3.0)
}

/// Which reality condition the frames obey.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TwistSpec {
    /// Hyperbolic spheres, mean curvature `-2`.
    Hyperbolic,
    /// Elliptic spheres, mean curvature `+2`.
    Elliptic,
}

impl TwistSpec {
    pub fn mean_curvature(self) -> f64 {
        match self {
            TwistSpec::Hyperbolic => -2.0,
            TwistSpec::Elliptic => 2.0,
        }
    }

    pub fn from_mean_curvature(h: f64) -> Result<Self> {
        if h == -2.0 {
            Ok(TwistSpec::Hyperbolic)
        } else if h == 2.0 {
            Ok(TwistSpec::Elliptic)
        } else {
            Err(Error::InvalidParameter(format!("mean curvature must be -2 or 2, got {h}")))
        }
    }

    /// Conjugating matrix of the real form.
    pub fn t_matrix(self) -> Mat3C {
        let mut t = p12();
        t.0[2][2] = real(-self.mean_curvature() / 2.0);
        t
    }

    /// Matrix turning a frame into a real frame.
    pub fn n_matrix(self) -> Mat3C {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let corner = C::new(-self.mean_curvature() / 2.0, 0.0).sqrt();
        Mat3C([
            [real(s), real(s), real(0.0)],
            [c(0.0, s), c(0.0, -s), real(0.0)],
            [real(0.0), real(0.0), corner],
        ])
    }
}

/// Transposition of the first two coordinates.
pub fn p12() -> Mat3C {
    Mat3C::from_real([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
}

/// Cyclic permutation matrix generating the vacuum.
pub fn p132() -> Mat3C {
    Mat3C::from_real([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
}

pub fn q_matrix() -> Mat3C {
    let e = epsilon();
    Mat3C::diag(e.powi(4), e.powi(2), real(1.0))
}

/// Conjugating matrix of the order-six automorphism, `Q·P₁₂`.
pub fn p_matrix() -> Mat3C {
    q_matrix() * p12()
}

/// The full set of constant matrices in one place.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistConstants {
    pub epsilon: C,
    pub t_plus: Mat3C,
    pub t_minus: Mat3C,
    pub p: Mat3C,
    pub q: Mat3C,
    pub p12: Mat3C,
    pub p132: Mat3C,
    pub n_plus: Mat3C,
    pub n_minus: Mat3C,
}

impl TwistConstants {
    pub fn new() -> Self {
        TwistConstants {
            epsilon: epsilon(),
            t_plus: TwistSpec::Hyperbolic.t_matrix(),
            t_minus: TwistSpec::Elliptic.t_matrix(),
            p: p_matrix(),
            q: q_matrix(),
            p12: p12(),
            p132: p132(),
            n_plus: TwistSpec::Hyperbolic.n_matrix(),
            n_minus: TwistSpec::Elliptic.n_matrix(),
        }
    }
}

impl Default for TwistConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// `P·(gᵗ)⁻¹·P⁻¹`.
pub fn sigma_twist(g: &Mat3C) -> Result<Mat3C> {
    let p = p_matrix();
    let pinv = p.inverse()?;
    Ok(p * g.transpose().inverse()? * pinv)
}

/// `T·ḡ·T⁻¹`.
pub fn tau_twist(g: &Mat3C, spec: TwistSpec) -> Mat3C {
    let t = spec.t_matrix();
    let tinv = t.inverse().expect("T is invertible");
    t * g.conj() * tinv
}

/// Largest violation of `σ(g(λ)) = g(ελ)` and `τ(g(1/λ̄)) = g(λ)` over the samples.
pub fn check_twisted<F>(loop_fn: F, spec: TwistSpec, samples: &[C]) -> Result<f64>
where
    F: Fn(C) -> Result<Mat3C>,
{
    let eps = epsilon();
    let mut worst: f64 = 0.0;
    for &lam in samples {
        let g = loop_fn(lam)?;
        worst = worst.max(sigma_twist(&g)?.dist(&loop_fn(eps * lam)?));
        worst = worst.max(tau_twist(&loop_fn(lam.conj().inv())?, spec).dist(&g));
    }
    Ok(worst)
}

/// Distance from `a` to the complex line through `b`, relative to `‖b‖`.
pub fn projective_distance(a: &Mat3C, b: &Mat3C) -> f64 {
    let mut num = C::new(0.0, 0.0);
    let mut den = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            num += b.0[i][j].conj() * a.0[i][j];
            den += b.0[i][j].norm_sqr();
        }
    }
    if den == 0.0 {
        return a.max_abs();
    }
    let mu = num / den;
    (*a - b.scale(mu)).max_abs() / b.max_abs()
}

/// As [`check_twisted`], but each condition only up to a scalar multiple.
pub fn check_twisted_projective<F>(loop_fn: F, spec: TwistSpec, samples: &[C]) -> Result<f64>
where
    F: Fn(C) -> Result<Mat3C>,
{
    let eps = epsilon();
    let mut worst: f64 = 0.0;
    for &lam in samples {
        let g = loop_fn(lam)?;
        worst = worst.max(projective_distance(&sigma_twist(&g)?, &loop_fn(eps * lam)?));
        worst = worst.max(projective_distance(&tau_twist(&loop_fn(lam.conj().inv())?, spec), &g));
    }
    Ok(worst)
}
