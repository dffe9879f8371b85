//! Dressing by a six-pole element.

use crate::algebra::{real, Mat3C, Vec3C, C, R3};
use crate::error::{Error, Result};
use crate::dressing::removable_limit;
use crate::dressing::three::{MetricGrid, DENOMINATOR_TOL};
use crate::grid::{GridSpec, SurfaceGrid};
use crate::loopgroup::simple::{GaugeSign, ProjLine, Rank, SimpleElement};
use crate::loopgroup::sixpole::SixPoleElement;
use crate::loopgroup::twist::TwistSpec;
use crate::surfaces::real::real_immersion;
use crate::surfaces::vacuum::BaseSurface;

/// Transported data at one node.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dress6Result {
    pub line1_tilde: ProjLine,
    pub line2_tilde: ProjLine,
    /// `(2b̃₁c̃₁-1)(2b̃₂c̃₂-1)`, real for reality-preserving data.
    pub product: C,
    pub h: f64,
    pub admissible: bool,
}

impl Dress6Result {
    pub fn d_tilde(&self) -> Option<f64> {
        self.admissible.then(|| self.product.re.sqrt())
    }
}

/// A six-pole element acting on a base surface.
#[derive(Clone, Copy, Debug)]
pub struct SixPoleDressing<B> {
    element: SixPoleElement,
    base: B,
}

impl<B: BaseSurface> SixPoleDressing<B> {
    pub fn new(element: SixPoleElement, base: B) -> Result<Self> {
        if element.spec() != base.twist() {
            return Err(Error::TwistMismatch);
        }
        Ok(SixPoleDressing { element, base })
    }

    pub fn element(&self) -> &SixPoleElement {
        &self.element
    }

    pub fn spec(&self) -> TwistSpec {
        self.element.spec()
    }

    /// `ℓ̃₂ = ℓ₂·E(1/ᾱ)` and `ℓ̃₁ = ℓ₁·g_{1/ᾱ,ℓ₂}(α)·E(α)·g_{1/ᾱ,ℓ̃₂}(α)⁻¹`.
    pub fn at(&self, z: C) -> Result<Dress6Result> {
        let alpha = self.element.alpha();
        let mirror = self.element.mirror_pole();
        let line2_tilde = self.element.line2().times(&self.base.frame(z, mirror)?)?;
        let second = self.element.second();
        let carrier = second.eval(alpha)? * self.base.frame(z, alpha)? * second.with_line(line2_tilde).eval(alpha)?.inverse()?;
        let line1_tilde = self.element.line1().times(&carrier)?;
        let product = line1_tilde.cone_gap() * line2_tilde.cone_gap();
        Ok(Dress6Result {
            line1_tilde,
            line2_tilde,
            product,
            h: product.re * self.base.exp_psi(z),
            admissible: product.re > 0.0,
        })
    }

    pub fn metric(&self, grid: GridSpec) -> MetricGrid {
        MetricGrid::from_nodes(grid, |z| self.at(z).map(|r| (r.h, r.admissible)))
    }

    fn tilde_factors(&self, node: &Dress6Result) -> Result<(SimpleElement, SimpleElement)> {
        let d = real(node.product.re).sqrt();
        let first = SimpleElement::new(self.element.alpha(), node.line1_tilde, d, Rank::One, GaugeSign::Plus)?;
        let second = SimpleElement::bare(self.element.mirror_pole(), node.line2_tilde, Rank::One)?;
        Ok((first, second))
    }

    /// `Ẽ(λ) = A·g₁(λ)·g₂(λ)·E(λ)·g̃₂(λ)⁻¹·g̃₁(λ)⁻¹·Ã⁻¹`.
    pub fn frame(&self, z: C, lambda: C) -> Result<Mat3C> {
        let node = self.at(z)?;
        let (f1, f2) = self.tilde_factors(&node)?;
        let tilde = f1.eval(lambda)? * f2.eval(lambda)?;
        Ok(self.element.eval(lambda)? * self.base.frame(z, lambda)? * tilde.inverse()?)
    }

    /// Third column of `E·(Ã·g̃₁·g̃₂)⁻¹` in closed form.
    pub fn closed_form_position(&self, z: C, lambda: C) -> Result<Vec3C> {
        let node = self.at(z)?;
        let alpha = self.element.alpha();
        let ab = alpha.conj();
        let (a3, ab3, l3) = (alpha.powi(3), ab.powi(3), lambda.powi(3));
        let q = l3 * ab3 + real(1.0);
        let w = l3 + a3;
        let scale = 1.0 + a3.norm() * (1.0 + l3.norm());
        if q.norm() <= DENOMINATOR_TOL * scale || w.norm() <= DENOMINATOR_TOL * scale {
            return Err(Error::DenominatorPole);
        }
        let (b1, c1) = (node.line1_tilde.b(), node.line1_tilde.c());
        let (b2, c2) = (node.line2_tilde.b(), node.line2_tilde.c());
        let k = node.line2_tilde.cone_gap();
        let hm = self.base.mean_curvature();
        let h = real(hm);
        let s = real((-2.0 * hm).sqrt() / self.base.exp_psi(z).sqrt());
        let jet = self.base.position(z, lambda)?;
        let (r, rz, rzb) = (jet.r, jet.r_z, jet.r_zbar);
        let two = real(2.0);
        let four = real(4.0);
        let t1 = (rzb.scale(-two * s * (l3 * ab3 * k - real(1.0)))
            + rz.scale(four * s * ab * ab * c2 * c2)
            + r.scale(four * h * ab * c2))
            .scale(alpha * l3 * b1 / (q * k * w));
        let t2 = (rzb.scale(four * s * ab * l3 * b2 * b2)
            + rz.scale(two * s * (q - two * b2 * c2))
            + r.scale(four * h * ab * ab * l3 * b2))
            .scale(alpha * alpha * c1 / (q * w));
        let t3 = (rzb.scale(two * s * ab * ab * l3 * b2) - rz.scale(two * s * ab * c2) + r.scale(h * (l3 * ab3 - real(1.0))))
            .scale((a3 - l3) / (q * w));
        Ok(t1 + t2 + t3)
    }

    /// At a pole of the element the removable limit is taken.
    pub fn immersion_column(&self, z: C, lambda: C) -> Result<Vec3C> {
        match self.immersion_column_direct(z, lambda) {
            Err(Error::DenominatorPole | Error::PoleProximity { .. }) => {
                removable_limit(|l| self.immersion_column_direct(z, l), lambda)
            }
            r => r,
        }
    }

    fn immersion_column_direct(&self, z: C, lambda: C) -> Result<Vec3C> {
        Ok(self.element.eval(lambda)? * self.closed_form_position(z, lambda)?)
    }

    pub fn immersion(&self, z: C, lambda: C) -> Result<R3> {
        Ok(real_immersion(&self.immersion_column(z, lambda)?, self.spec()))
    }

    pub fn surface(&self, grid: GridSpec, lambda: C) -> SurfaceGrid {
        SurfaceGrid::from_fn(grid, |z| self.immersion(z, lambda))
    }
}
