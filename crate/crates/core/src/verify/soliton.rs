//! Soliton τ-functions of the Tzitzéica equation and the metrics they generate.

use crate::algebra::{real, C};
use crate::error::{Error, Result};
use crate::verify::fd::{wirtinger, FdSettings};

/// Relative size of `|τ|` below which a node lies on a singular curve.
pub const TAU_ZERO_TOL: f64 = 1e-6;

/// One term `coef·exp(a·z + b·z̄)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExpTerm {
    pub coef: C,
    pub a: C,
    pub b: C,
}

impl ExpTerm {
    pub fn new(coef: C, a: C, b: C) -> Self {
        ExpTerm { coef, a, b }
    }

    pub fn constant(coef: C) -> Self {
        ExpTerm { coef, a: real(0.0), b: real(0.0) }
    }

    pub fn eval(&self, z: C) -> C {
        self.coef * (self.a * z + self.b * z.conj()).exp()
    }
}

/// A finite sum of exponential terms.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ExpPoly {
    terms: Vec<ExpTerm>,
}

impl ExpPoly {
    pub fn new(terms: Vec<ExpTerm>) -> Self {
        ExpPoly { terms }
    }

    pub fn terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn eval(&self, z: C) -> C {
        self.terms.iter().map(|t| t.eval(z)).sum()
    }

    /// Largest modulus among the individual terms.
    pub fn largest_term(&self, z: C) -> f64 {
        self.terms.iter().map(|t| t.eval(z).norm()).fold(0.0, f64::max)
    }

    pub fn is_near_zero(&self, z: C) -> bool {
        self.eval(z).norm() < TAU_ZERO_TOL * (1.0 + self.largest_term(z))
    }

    /// `(ln τ)_zz̄` in closed form.
    pub fn log_laplacian(&self, z: C) -> Result<C> {
        if self.is_near_zero(z) {
            return Err(Error::TauZero);
        }
        let mut t = (real(0.0), real(0.0), real(0.0), real(0.0));
        for term in &self.terms {
            let e = term.eval(z);
            t.0 += e;
            t.1 += term.a * e;
            t.2 += term.b * e;
            t.3 += term.a * term.b * e;
        }
        Ok((t.0 * t.3 - t.1 * t.2) / (t.0 * t.0))
    }

    /// `h = 1 - 2(ln τ)_zz̄`; the real part is returned.
    pub fn metric(&self, z: C) -> Result<f64> {
        Ok(1.0 - 2.0 * self.log_laplacian(z)?.re)
    }

    /// The same metric with `(ln |τ|)_zz̄` taken by finite differences.
    pub fn metric_fd(&self, z: C, settings: FdSettings) -> Result<f64> {
        if self.is_near_zero(z) {
            return Err(Error::TauZero);
        }
        let (_, _, l) = wirtinger(|w| real(self.eval(w).norm().ln()), z, settings);
        Ok(1.0 - 2.0 * l.re)
    }
}

fn phase(k: C, s: C) -> ExpTerm {
    ExpTerm::new(s.exp(), k, real(3.0) / k)
}

/// `τ = 1 - exp(kz + 3z̄/k + s)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OneSoliton {
    pub k: C,
    pub s: C,
}

impl OneSoliton {
    pub fn new(k: C, s: C) -> Result<Self> {
        if k.norm() == 0.0 || !k.is_finite() || !s.is_finite() {
            return Err(Error::DegenerateParameters);
        }
        Ok(OneSoliton { k, s })
    }

    pub fn tau(&self) -> ExpPoly {
        let mut e = phase(self.k, self.s);
        e.coef = -e.coef;
        ExpPoly::new(vec![ExpTerm::constant(real(1.0)), e])
    }
}

/// `(k₁-k₂)²(k₁²-k₁k₂+k₂²) / ((k₁+k₂)²(k₁²+k₁k₂+k₂²))`.
pub fn interaction_coefficient(k1: C, k2: C) -> Result<C> {
    let sum = k1 + k2;
    let q = k1 * k1 + k1 * k2 + k2 * k2;
    let scale = k1.norm().max(k2.norm()).powi(2);
    if sum.norm() < 1e-12 * k1.norm().max(k2.norm()) || q.norm() < 1e-12 * scale {
        return Err(Error::DegenerateParameters);
    }
    let diff = k1 - k2;
    Ok(diff * diff * (k1 * k1 - k1 * k2 + k2 * k2) / (sum * sum * q))
}

/// `τ = 1 + e^{θ₁} + e^{θ₂} + A₁₂·e^{θ₁+θ₂}` with `θᵢ = kᵢz + 3z̄/kᵢ + sᵢ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoSoliton {
    pub k1: C,
    pub k2: C,
    pub s1: C,
    pub s2: C,
}

impl TwoSoliton {
    pub fn new(k1: C, k2: C, s1: C, s2: C) -> Result<Self> {
        if k1.norm() == 0.0 || k2.norm() == 0.0 || ![k1, k2, s1, s2].iter().all(|v| v.is_finite()) {
            return Err(Error::DegenerateParameters);
        }
        interaction_coefficient(k1, k2)?;
        Ok(TwoSoliton { k1, k2, s1, s2 })
    }

    pub fn interaction(&self) -> C {
        interaction_coefficient(self.k1, self.k2).expect("checked at construction")
    }

    pub fn tau(&self) -> ExpPoly {
        let (t1, t2) = (phase(self.k1, self.s1), phase(self.k2, self.s2));
        let both = ExpTerm::new(self.interaction() * t1.coef * t2.coef, t1.a + t2.a, t1.b + t2.b);
        ExpPoly::new(vec![ExpTerm::constant(real(1.0)), t1, t2, both])
    }
}

pub fn tau_one_soliton_h(z: C, p: &OneSoliton) -> Result<f64> {
    p.tau().metric(z)
}

pub fn tau_two_soliton_h(z: C, p: &TwoSoliton) -> Result<f64> {
    p.tau().metric(z)
}
