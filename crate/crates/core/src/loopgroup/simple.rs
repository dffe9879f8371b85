//! Projective lines and the rational loop elements with three simple poles.

use crate::algebra::{real, solve_line_normalize, Mat3C, Vec3C, C};
use crate::error::{Error, Result};
use crate::loopgroup::twist::{check_twisted, check_twisted_projective, TwistSpec};

/// Relative distance to the cone `2bc = 1` below which a line is refused.
pub const CONE_TOL: f64 = 1e-9;

/// Relative distance of `λ³` to `α³` below which evaluation is refused.
pub const POLE_TOL: f64 = 1e-9;

/// The line `ℂ·(b, c, 1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjLine {
    b: C,
    c: C,
}

impl ProjLine {
    pub fn new(b: C, c: C) -> Result<Self> {
        if !b.is_finite() || !c.is_finite() {
            return Err(Error::InvalidParameter("line coordinates must be finite".into()));
        }
        let gap = (real(2.0) * b * c - real(1.0)).norm();
        if gap <= CONE_TOL * (1.0 + b.norm() * c.norm()) {
            return Err(Error::LineInCone { gap });
        }
        Ok(ProjLine { b, c })
    }

    /// The line through a nonzero vector with nonvanishing third coordinate.
    pub fn through(v: &Vec3C) -> Result<Self> {
        let (b, c) = solve_line_normalize(v)?;
        Self::new(b, c)
    }

    /// A line of the form `ℂ·(b, b̄, 1)`.
    pub fn self_conjugate(b: C) -> Result<Self> {
        Self::new(b, b.conj())
    }

    pub fn b(&self) -> C {
        self.b
    }

    pub fn c(&self) -> C {
        self.c
    }

    /// `2bc - 1`, the quantity that vanishes on the cone.
    pub fn cone_gap(&self) -> C {
        real(2.0) * self.b * self.c - real(1.0)
    }

    pub fn vector(&self) -> Vec3C {
        Vec3C::new(self.b, self.c, real(1.0))
    }

    /// Transports the line as a row vector: `ℓ·m`.
    pub fn times(&self, m: &Mat3C) -> Result<Self> {
        Self::through(&self.vector().times(m))
    }
}

/// Rank of the residue of a simple element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rank {
    One,
    Two,
}

impl Rank {
    pub fn exponent(self) -> i32 {
        match self {
            Rank::One => 1,
            Rank::Two => 2,
        }
    }
}

/// Third diagonal entry of the gauge factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaugeSign {
    Plus,
    Minus,
}

impl GaugeSign {
    pub fn value(self) -> f64 {
        match self {
            GaugeSign::Plus => 1.0,
            GaugeSign::Minus => -1.0,
        }
    }
}

/// How a loop element behaves under a reality condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reality {
    /// Fixed by the twist.
    Exact,
    /// Fixed up to a constant scalar.
    Projective,
    None,
}

/// `diag(d, 1/d, ±1)·[I + 2/(λ³-α³)·M(λ)]`, with `M` the rank-one or rank-two residue numerator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimpleElement {
    alpha: C,
    line: ProjLine,
    d: C,
    rank: Rank,
    sign: GaugeSign,
}

impl SimpleElement {
    pub fn new(alpha: C, line: ProjLine, d: C, rank: Rank, sign: GaugeSign) -> Result<Self> {
        if !alpha.is_finite() || alpha.norm() == 0.0 {
            return Err(Error::InvalidParameter("pole must be nonzero".into()));
        }
        if !d.is_finite() || d.norm() == 0.0 {
            return Err(Error::InvalidParameter("gauge d must be nonzero".into()));
        }
        Ok(SimpleElement { alpha, line, d, rank, sign })
    }

    /// The element without gauge factor.
    pub fn bare(alpha: C, line: ProjLine, rank: Rank) -> Result<Self> {
        Self::new(alpha, line, real(1.0), rank, GaugeSign::Plus)
    }

    /// Unit-circle pole, line `ℂ·(b, b̄, 1)`, positive gauge `d = √(2|b|²-1)`.
    pub fn unit_circle(alpha: C, b: C, rank: Rank) -> Result<Self> {
        if (alpha.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!("|alpha| must be 1, got {}", alpha.norm())));
        }
        let radicand = 2.0 * b.norm_sqr() - 1.0;
        if radicand <= 0.0 {
            return Err(Error::NonPositiveGauge { radicand });
        }
        Self::new(alpha, ProjLine::self_conjugate(b)?, real(radicand.sqrt()), rank, GaugeSign::Plus)
    }

    pub fn alpha(&self) -> C {
        self.alpha
    }

    pub fn line(&self) -> ProjLine {
        self.line
    }

    pub fn d(&self) -> C {
        self.d
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn sign(&self) -> GaugeSign {
        self.sign
    }

    pub fn gauge(&self) -> Mat3C {
        Mat3C::diag(self.d, self.d.inv(), real(self.sign.value()))
    }

    pub fn with_line(&self, line: ProjLine) -> Self {
        SimpleElement { line, ..*self }
    }

    pub fn with_d(&self, d: C) -> Result<Self> {
        Self::new(self.alpha, self.line, d, self.rank, self.sign)
    }

    pub fn poles(&self) -> [C; 3] {
        let e2 = crate::loopgroup::twist::epsilon().powi(2);
        [self.alpha, e2 * self.alpha, e2 * e2 * self.alpha]
    }

    fn check_pole(&self, lambda: C) -> Result<C> {
        let a3 = self.alpha.powi(3);
        let gap = lambda.powi(3) - a3;
        if !lambda.is_finite() || gap.norm() < POLE_TOL * (1.0 + a3.norm()) {
            return Err(Error::PoleProximity { distance: gap.norm() });
        }
        Ok(gap)
    }

    fn numerator(&self, lambda: C) -> Mat3C {
        let (a, l) = (self.alpha, lambda);
        let (b, c) = (self.line.b, self.line.c);
        let dd = self.line.cone_gap();
        let (a2, a3, l2) = (a * a, a * a * a, l * l);
        match self.rank {
            Rank::One => Mat3C([
                [a3 * b * c / dd, a * l2 * c * c / dd, a2 * l * c / dd],
                [a2 * l * b * b, a3 * b * c, a * l2 * b],
                [a * l2 * b, a2 * l * c, a3],
            ]),
            Rank::Two => Mat3C([
                [a3 * (b * c - real(1.0)) / dd, -a * l2 * c * c / dd, a2 * l * c / dd],
                [a2 * l * b * b, a3 * (real(1.0) - b * c), -a * l2 * b],
                [-a * l2 * b, a2 * l * c, real(0.0)],
            ]),
        }
    }

    /// The bracket `I + 2/(λ³-α³)·M(λ)` without gauge factor.
    pub fn eval_bare(&self, lambda: C) -> Result<Mat3C> {
        let gap = self.check_pole(lambda)?;
        Ok(Mat3C::identity() + self.numerator(lambda).scale(real(2.0) / gap))
    }

    pub fn eval(&self, lambda: C) -> Result<Mat3C> {
        Ok(self.gauge() * self.eval_bare(lambda)?)
    }

    /// `lim_{λ→α} (λ-α)·g(λ)`.
    pub fn residue(&self) -> Mat3C {
        let a = self.alpha;
        self.gauge() * self.numerator(a).scale(real(2.0) / (real(3.0) * a * a))
    }

    /// Predicted determinant `((λ³+α³)/(λ³-α³))^rank` including `det A`.
    pub fn determinant_law(&self, lambda: C) -> C {
        let (l3, a3) = (lambda.powi(3), self.alpha.powi(3));
        ((l3 + a3) / (l3 - a3)).powi(self.rank.exponent()) * real(self.sign.value())
    }

    /// The point at which the line is transported under dressing:
    /// the pole itself for rank one, its negative for rank two.
    pub fn transport_point(&self) -> C {
        match self.rank {
            Rank::One => self.alpha,
            Rank::Two => -self.alpha,
        }
    }

    /// Rank-one element with pole at the transport point. It differs from `self`
    /// by the scalar [`SimpleElement::representative_factor`].
    pub fn representative(&self) -> SimpleElement {
        SimpleElement { alpha: self.transport_point(), rank: Rank::One, ..*self }
    }

    /// Scalar `s(λ)` with `self(λ) = s(λ)·representative(λ)`.
    pub fn representative_factor(&self, lambda: C) -> C {
        match self.rank {
            Rank::One => real(1.0),
            Rank::Two => {
                let (l3, a3) = (lambda.powi(3), self.alpha.powi(3));
                (l3 + a3) / (l3 - a3)
            }
        }
    }

    /// Classifies the element against `spec` by sampling the reality conditions.
    pub fn reality(&self, spec: TwistSpec) -> Reality {
        let samples = [
            C::new(0.37, 0.81),
            C::new(-1.3, 0.2),
            C::new(0.5, -0.45),
            C::new(2.1, 1.7),
        ];
        let scale = samples
            .iter()
            .filter_map(|l| self.eval(*l).ok())
            .fold(1.0_f64, |m, g| m.max(g.max_abs()));
        let exact = check_twisted(|l| self.eval(l), spec, &samples);
        match exact {
            Ok(dev) if dev < 1e-9 * scale => return Reality::Exact,
            Err(_) => return Reality::None,
            _ => {}
        }
        match check_twisted_projective(|l| self.eval(l), spec, &samples) {
            Ok(dev) if dev < 1e-9 => Reality::Projective,
            _ => Reality::None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::c;
    use crate::loopgroup::twist::p12;

    fn element(rank: Rank) -> SimpleElement {
        let line = ProjLine::new(c(0.4, -0.9), c(1.2, 0.3)).unwrap();
        SimpleElement::new(c(0.8, 0.5), line, c(1.3, -0.2), rank, GaugeSign::Plus).unwrap()
    }

    #[test]
    fn tends_to_gauge_at_infinity() {
        for rank in [Rank::One, Rank::Two] {
            let e = element(rank);
            let g = e.eval(c(1e8, 3e7)).unwrap();
            assert!(g.dist(&e.gauge()) < 1e-6);
        }
    }

    #[test]
    fn rank_one_determinant_at_zero() {
        let e = SimpleElement::bare(c(0.8, 0.5), ProjLine::new(c(0.4, -0.9), c(1.2, 0.3)).unwrap(), Rank::One).unwrap();
        assert!((e.eval(real(0.0)).unwrap().det() + real(1.0)).norm() < 1e-13);
    }

    #[test]
    fn rank_two_value_at_negative_pole_has_row_space_spanned_by_line() {
        let e = element(Rank::Two);
        let l = e.line();
        let g = e.eval(-e.alpha()).unwrap();
        for x in [Vec3C::new(real(1.0), real(0.0), -l.b()), Vec3C::new(real(0.0), real(1.0), -l.c())] {
            assert!((g * x).max_abs() < 1e-11);
        }
        assert!((g * p12() * l.vector()).max_abs() > 0.1);
    }

    #[test]
    fn rank_one_kernel_at_negative_pole() {
        let e = element(Rank::One);
        let v = e.eval(-e.alpha()).unwrap() * p12() * e.line().vector();
        assert!(v.max_abs() < 1e-11);
    }

    #[test]
    fn pole_is_refused() {
        let e = element(Rank::One);
        let pole = e.poles()[1];
        assert!(matches!(e.eval(pole), Err(Error::PoleProximity { .. })));
    }

    #[test]
    fn cone_line_is_refused() {
        assert!(matches!(ProjLine::new(real(0.5), real(1.0)), Err(Error::LineInCone { .. })));
        assert!(ProjLine::new(real(0.0), real(0.0)).is_ok());
    }

    #[test]
    fn residue_matches_limit() {
        let e = element(Rank::One);
        let a = e.alpha();
        let h = 1e-7;
        let near = e.eval(a + c(h, 0.0)).unwrap().scale(c(h, 0.0));
        assert!(near.dist(&e.residue()) < 1e-5 * e.residue().max_abs());
    }

    #[test]
    fn unit_circle_constructor_checks_data() {
        assert!(SimpleElement::unit_circle(c(0.0, 1.0), c(-0.5, 1.0), Rank::One).is_ok());
        assert!(matches!(
            SimpleElement::unit_circle(c(0.0, 1.0), c(0.3, 0.3), Rank::One),
            Err(Error::NonPositiveGauge { .. })
        ));
        assert!(SimpleElement::unit_circle(c(0.0, 2.0), c(-0.5, 1.0), Rank::One).is_err());
    }

    #[test]
    fn unit_circle_reality_classes() {
        let b = c(0.9, 0.6);
        let alpha = C::from_polar(1.0, 0.7);
        let r2 = SimpleElement::unit_circle(alpha, b, Rank::Two).unwrap();
        let r1 = SimpleElement::unit_circle(alpha, b, Rank::One).unwrap();
        assert_eq!(r2.reality(TwistSpec::Hyperbolic), Reality::Exact);
        assert_eq!(r1.reality(TwistSpec::Hyperbolic), Reality::Projective);
        assert_eq!(r1.reality(TwistSpec::Elliptic), Reality::None);
    }

    #[test]
    fn representative_reproduces_rank_two() {
        let e = element(Rank::Two);
        let rep = e.representative();
        for l in [c(0.3, 0.2), c(-1.1, 0.7), c(2.0, -0.4)] {
            let lhs = e.eval(l).unwrap();
            let rhs = rep.eval(l).unwrap().scale(e.representative_factor(l));
            assert!(lhs.dist(&rhs) < 1e-12 * lhs.max_abs());
        }
    }
}
