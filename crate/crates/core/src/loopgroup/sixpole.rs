//! Products of two rank-one elements whose pole orbits are exchanged by `λ ↦ 1/λ̄`.

use crate::algebra::{real, Mat3C, C};
use crate::error::{Error, Result};
use crate::loopgroup::simple::{GaugeSign, ProjLine, Rank, SimpleElement};
use crate::loopgroup::twist::TwistSpec;

/// Relative tolerance for `|α| = 1` and for the vanishing denominator.
const SIX_POLE_TOL: f64 = 1e-12;

/// `-|α|⁴|b₂|² + |α|²|c₂|² + (H/4)(1-|α|⁶)`.
pub fn sixpole_denominator(alpha: C, line2: &ProjLine, spec: TwistSpec) -> f64 {
    let h = spec.mean_curvature();
    let a2 = alpha.norm_sqr();
    -a2 * a2 * line2.b().norm_sqr() + a2 * line2.c().norm_sqr() + h / 4.0 * (1.0 - a2 * a2 * a2)
}

/// The positivity functional whose sign decides whether a gauge exists.
pub fn psi(alpha: C, line2: &ProjLine, spec: TwistSpec) -> f64 {
    let h = spec.mean_curvature();
    let a = alpha.norm();
    let (b2, c2) = (line2.b(), line2.c());
    let gap = line2.cone_gap().norm_sqr();
    let (bb, cc) = (b2.norm_sqr(), c2.norm_sqr());
    gap / 4.0 * a.powi(12) - cc * cc * a.powi(10) - h * cc * a.powi(8)
        + (-2.0 * (b2 * c2).re - 0.5) * a.powi(6)
        - h * bb * a.powi(4)
        - bb * bb * a * a
        + gap / 4.0
}

/// Line `ℓ₁` forced by the reality condition, and `|d|² = Ψ / denominator²`.
pub fn derive_sixpole_line1(alpha: C, line2: &ProjLine, spec: TwistSpec) -> Result<(ProjLine, f64)> {
    let a = alpha.norm();
    if !alpha.is_finite() || a == 0.0 || (a - 1.0).abs() < SIX_POLE_TOL {
        return Err(Error::InvalidParameter("six-pole element requires |alpha| != 1".into()));
    }
    let h = spec.mean_curvature();
    let den = sixpole_denominator(alpha, line2, spec);
    let scale = 1.0 + a.powi(6) * (1.0 + line2.b().norm_sqr() + line2.c().norm_sqr());
    if den.abs() < SIX_POLE_TOL * scale {
        return Err(Error::DegenerateDenominator);
    }
    let (b2, c2) = (line2.b(), line2.c());
    let a2 = a * a;
    let a4 = a2 * a2;
    let a6 = a4 * a2;
    let gap2 = line2.cone_gap();
    let b1 = (-b2 * real(-a2 * b2.norm_sqr() + c2.norm_sqr() - h / 2.0 * a4)
        + c2.conj() * real(0.5 * (1.0 + a6)))
        / real(den);
    let c1 = (-c2 * real(b2.norm_sqr() + a4 * c2.norm_sqr() + h / 2.0 * a2)
        + gap2 * b2.conj() * real(0.5 * (1.0 + a6)))
        / (gap2 * real(den));
    let line1 = ProjLine::new(b1, c1)?;
    let p = psi(alpha, line2, spec);
    if p <= 0.0 {
        return Err(Error::NonPositivePsi { psi: p });
    }
    Ok((line1, p / (den * den)))
}

/// `diag(d, 1/d, 1)·g_{α,ℓ₁}(λ)·g_{1/ᾱ,ℓ₂}(λ)` with `ℓ₁` and `d > 0` derived from `(α, ℓ₂)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SixPoleElement {
    alpha: C,
    line1: ProjLine,
    line2: ProjLine,
    spec: TwistSpec,
    d: f64,
}

impl SixPoleElement {
    pub fn new(alpha: C, line2: ProjLine, spec: TwistSpec) -> Result<Self> {
        let (line1, d2) = derive_sixpole_line1(alpha, &line2, spec)?;
        Ok(SixPoleElement { alpha, line1, line2, spec, d: d2.sqrt() })
    }

    pub fn alpha(&self) -> C {
        self.alpha
    }

    /// `1/ᾱ`, the pole of the second factor.
    pub fn mirror_pole(&self) -> C {
        self.alpha.conj().inv()
    }

    pub fn line1(&self) -> ProjLine {
        self.line1
    }

    pub fn line2(&self) -> ProjLine {
        self.line2
    }

    pub fn spec(&self) -> TwistSpec {
        self.spec
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn gauge(&self) -> Mat3C {
        Mat3C::diag(real(self.d), real(1.0 / self.d), real(1.0))
    }

    /// First factor `A·g_{α,ℓ₁}` including the gauge.
    pub fn first(&self) -> SimpleElement {
        SimpleElement::new(self.alpha, self.line1, real(self.d), Rank::One, GaugeSign::Plus)
            .expect("validated at construction")
    }

    /// Second factor `g_{1/ᾱ,ℓ₂}`.
    pub fn second(&self) -> SimpleElement {
        SimpleElement::bare(self.mirror_pole(), self.line2, Rank::One).expect("validated at construction")
    }

    pub fn poles(&self) -> [C; 6] {
        let a = self.first().poles();
        let b = self.second().poles();
        [a[0], a[1], a[2], b[0], b[1], b[2]]
    }

    pub fn eval(&self, lambda: C) -> Result<Mat3C> {
        Ok(self.first().eval(lambda)? * self.second().eval(lambda)?)
    }

    /// Whether the second line is the fixed line `ℂ·(1,1,1)`, for which dressing is trivial.
    pub fn is_trivial(&self) -> bool {
        (self.line2.b() - real(1.0)).norm() < 1e-14 && (self.line2.c() - real(1.0)).norm() < 1e-14
    }
}
