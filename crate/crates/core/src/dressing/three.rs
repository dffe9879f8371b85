//! Dressing by a single simple element.

use rayon::prelude::*;

use crate::algebra::{real, Mat3C, Vec3C, C, R3};
use crate::error::{Error, Result};
use crate::dressing::removable_limit;
use crate::grid::{GridSpec, ScalarGrid, SurfaceGrid};
use crate::loopgroup::simple::{ProjLine, Reality, SimpleElement};
use crate::loopgroup::twist::{p12, TwistSpec};
use crate::surfaces::real::real_immersion;
use crate::surfaces::vacuum::BaseSurface;

/// Relative size below which the scale solution `φ` counts as zero.
pub const PHI_TOL: f64 = 1e-12;

/// Relative size below which a rational denominator counts as zero.
pub const DENOMINATOR_TOL: f64 = 1e-12;

/// `ℓ·E`, the line carried by the frame evaluated at the transport point.
pub fn transport_line3(line: &ProjLine, frame_at: &Mat3C) -> Result<ProjLine> {
    line.times(frame_at)
}

/// Transported data at one node.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Dress3Result {
    pub line_tilde: ProjLine,
    /// `2|b̃|² - 1`.
    pub radicand: f64,
    /// New metric `(2|b̃|² - 1)·e^ψ`, negative where the radicand is.
    pub h: f64,
    pub admissible: bool,
}

impl Dress3Result {
    /// `d̃ = √(2|b̃|² - 1)` where admissible.
    pub fn d_tilde(&self) -> Option<f64> {
        self.admissible.then(|| self.radicand.sqrt())
    }

    /// Gauge of the factor `g̃`; imaginary where the radicand is negative.
    fn gauge(&self) -> C {
        real(self.radicand).sqrt()
    }
}

/// Per-node state of a sampled metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeStatus {
    Admissible,
    /// Evaluated, but the new metric is not positive.
    Negative,
    Failed,
}

/// A sampled metric with its admissibility flags; failed nodes hold `0`.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricGrid {
    pub h: ScalarGrid,
    pub status: Vec<NodeStatus>,
}

impl MetricGrid {
    pub fn count(&self, s: NodeStatus) -> usize {
        self.status.iter().filter(|v| **v == s).count()
    }

    pub fn from_nodes<F>(spec: GridSpec, f: F) -> Self
    where
        F: Fn(C) -> Result<(f64, bool)> + Sync,
    {
        let rows: Vec<(C, NodeStatus)> = (0..spec.len())
            .into_par_iter()
            .map(|k| {
                let (i, j) = spec.node(k);
                match f(spec.z(i, j)) {
                    Ok((h, true)) if h.is_finite() => (real(h), NodeStatus::Admissible),
                    Ok((h, false)) if h.is_finite() => (real(h), NodeStatus::Negative),
                    _ => (real(0.0), NodeStatus::Failed),
                }
            })
            .collect();
        let (values, status) = rows.into_iter().unzip();
        MetricGrid { h: ScalarGrid::new(spec, values).expect("one value per node"), status }
    }
}

/// A simple element acting on a base surface.
#[derive(Clone, Copy, Debug)]
pub struct ThreePoleDressing<B> {
    element: SimpleElement,
    base: B,
}

impl<B: BaseSurface> ThreePoleDressing<B> {
    /// Requires the element to satisfy the base's reality condition, at least up to a scalar.
    pub fn new(element: SimpleElement, base: B) -> Result<Self> {
        match element.reality(base.twist()) {
            Reality::Exact | Reality::Projective => Ok(ThreePoleDressing { element, base }),
            Reality::None => Err(Error::InvalidParameter("element violates the reality condition".into())),
        }
    }

    /// As [`ThreePoleDressing::new`] for an explicitly requested twist case.
    pub fn with_spec(element: SimpleElement, base: B, spec: TwistSpec) -> Result<Self> {
        if spec != base.twist() {
            return Err(Error::TwistMismatch);
        }
        Self::new(element, base)
    }

    pub fn element(&self) -> &SimpleElement {
        &self.element
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn spec(&self) -> TwistSpec {
        self.base.twist()
    }

    pub fn transport_point(&self) -> C {
        self.element.transport_point()
    }

    pub fn at(&self, z: C) -> Result<Dress3Result> {
        let frame = self.base.frame(z, self.transport_point())?;
        let line_tilde = transport_line3(&self.element.line(), &frame)?;
        let radicand = 2.0 * line_tilde.b().norm_sqr() - 1.0;
        Ok(Dress3Result {
            line_tilde,
            radicand,
            h: radicand * self.base.exp_psi(z),
            admissible: radicand > 0.0,
        })
    }

    pub fn metric(&self, grid: GridSpec) -> MetricGrid {
        MetricGrid::from_nodes(grid, |z| self.at(z).map(|r| (r.h, r.admissible)))
    }

    /// Rank-one element with pole at the transport point, whose scalar multiple is the element.
    fn factor(&self) -> SimpleElement {
        self.element.representative()
    }

    fn tilde_factor(&self, node: &Dress3Result) -> Result<SimpleElement> {
        let f = self.factor().with_line(node.line_tilde);
        f.with_d(node.gauge())
    }

    /// `Ẽ(λ) = A·g(λ)·E(λ)·(Ã·g̃(λ))⁻¹`.
    pub fn frame(&self, z: C, lambda: C) -> Result<Mat3C> {
        let node = self.at(z)?;
        let g = self.factor().eval(lambda)?;
        let gt = self.tilde_factor(&node)?.eval(lambda)?;
        Ok(g * self.base.frame(z, lambda)? * gt.inverse()?)
    }

    /// `φ = ℓ·r(z, p)` with `(ln φ)_z` and `(ln φ)_z̄`.
    pub fn scale_solution(&self, z: C) -> Result<(C, C, C)> {
        let l = self.element.line().vector();
        let jet = self.base.position(z, self.transport_point())?;
        let phi = l.dot(&jet.r);
        let size = l.max_abs() * jet.r.max_abs();
        if phi.norm() <= PHI_TOL * size {
            return Err(Error::PhiZero);
        }
        Ok((phi, l.dot(&jet.r_z) / phi, l.dot(&jet.r_zbar) / phi))
    }

    /// `r̂ = [-H(λ³-p³)·r·e^ψ + 4p³(ln φ)_z̄·r_z - 4λ³(ln φ)_z·r_z̄] / ((λ³-p³)·e^ψ)`.
    pub fn closed_form_position(&self, z: C, lambda: C) -> Result<Vec3C> {
        let p3 = self.transport_point().powi(3);
        let l3 = lambda.powi(3);
        let gap = l3 - p3;
        if gap.norm() <= DENOMINATOR_TOL * (1.0 + p3.norm()) {
            return Err(Error::DenominatorPole);
        }
        let (_, lz, lzb) = self.scale_solution(z)?;
        let jet = self.base.position(z, lambda)?;
        let e = self.base.exp_psi(z);
        let h = self.base.mean_curvature();
        let num = jet.r.scale(-real(h) * gap * e) + jet.r_z.scale(real(4.0) * p3 * lzb) - jet.r_zbar.scale(real(4.0) * l3 * lz);
        Ok(num.scale((gap * e).inv()))
    }

    /// Third column of the dressed frame, assembled from the closed form.
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
        let p3 = self.transport_point().powi(3);
        let l3 = lambda.powi(3);
        if (l3 + p3).norm() <= DENOMINATOR_TOL * (1.0 + p3.norm()) {
            return Err(Error::DenominatorPole);
        }
        let r_hat = self.closed_form_position(z, lambda)?;
        let g = self.factor().eval(lambda)?;
        Ok(g * r_hat.scale((l3 - p3) / (l3 + p3)))
    }

    pub fn immersion(&self, z: C, lambda: C) -> Result<R3> {
        Ok(real_immersion(&self.immersion_column(z, lambda)?, self.spec()))
    }

    pub fn surface(&self, grid: GridSpec, lambda: C) -> SurfaceGrid {
        SurfaceGrid::from_fn(grid, |z| self.immersion(z, lambda))
    }

    /// Residues of `Ẽ` at the pole `p` and at `-p`; both vanish for a well-defined dressing.
    pub fn lemma_residues(&self, z: C) -> Result<[Mat3C; 2]> {
        let node = self.at(z)?;
        let g = self.factor();
        let gt = self.tilde_factor(&node)?;
        let p = g.alpha();
        let at_pole = g.residue() * self.base.frame(z, p)? * p12() * gt.eval(-p)?.transpose();
        let at_opposite = -(g.eval(-p)? * self.base.frame(z, -p)? * p12() * gt.residue().transpose() * p12());
        Ok([at_pole, at_opposite])
    }
}
