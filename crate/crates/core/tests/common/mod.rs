//! Closed-form reference values shared by the integration tests.
#![allow(dead_code)]

use loopdress::algebra::{c, real, Mat3C, C};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_c(rng: &mut ChaCha8Rng, scale: f64) -> C {
    c(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

pub fn unit(theta: f64) -> C {
    C::from_polar(1.0, theta)
}

pub fn sqrt3() -> f64 {
    3f64.sqrt()
}

/// `∂_z` of the spectral form of the vacuum frame, differentiated by hand.
pub fn vacuum_frame_z(z: C, lambda: C) -> Mat3C {
    let omega = C::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let coef = |j: i32| -> C {
        (0..3)
            .map(|m| {
                let w = omega.powi(m);
                omega.powi(-j * m) * lambda * w * (lambda * z * w + z.conj() / lambda * w * w).exp()
            })
            .sum::<C>()
            / 3.0
    };
    let p = loopdress::loopgroup::p132();
    Mat3C::identity().scale(coef(0)) + p.scale(coef(1)) + (p * p).scale(coef(2))
}

/// The new metric of the one-soliton example as a function of `x` alone.
pub fn metric_one_soliton_closed_form(x: f64) -> f64 {
    let r3 = sqrt3();
    let e2 = (2.0 * r3 * x).exp();
    let e4 = (4.0 * r3 * x).exp();
    let num = 3.0 * ((7.0 - 4.0 * r3) * e4 + 4.0 * e2 + 4.0 * r3 + 7.0);
    let den = (2.0 * r3 - 3.0) * e2 - (2.0 * r3 + 3.0);
    num / (den * den)
}

/// `1 + (√3/3)e^{√3x-3y} - (√3/3)e^{-√3x-3y}`.
pub fn tau_two_soliton_printed(x: f64, y: f64) -> f64 {
    let r3 = sqrt3();
    1.0 + r3 / 3.0 * (r3 * x - 3.0 * y).exp() - r3 / 3.0 * (-r3 * x - 3.0 * y).exp()
}

/// The printed three-exponential τ of the six-pole example.
pub fn tau_six_pole_printed(x: f64, y: f64) -> C {
    let r3 = sqrt3();
    let c1 = c(45.0 / 26.0, -55.0 * r3 / 78.0);
    let arg = c(15.0 / 4.0 * y - 5.0 / 4.0 * r3 * x, 9.0 / 4.0 * x + 3.0 / 4.0 * r3 * y);
    real(1.0) + c1 * arg.exp() + c1.conj() * arg.conj().exp() + real((15.0 / 2.0 * y - 5.0 / 2.0 * r3 * x).exp())
}

/// `½e^{2y} + (√3/6)e^{-(√3/3)(√3y-3x)} - (√3/6)e^{-(√3/3)(√3y+3x)}`.
pub fn phi_two_soliton_printed(x: f64, y: f64) -> f64 {
    let r3 = sqrt3();
    0.5 * (2.0 * y).exp() + r3 / 6.0 * (-(r3 / 3.0) * (r3 * y - 3.0 * x)).exp()
        - r3 / 6.0 * (-(r3 / 3.0) * (r3 * y + 3.0 * x)).exp()
}

/// `1 - 2(ln|τ|)_zz̄` by a five-point Laplacian, for real τ given in `(x, y)`.
pub fn metric_from_real_tau(tau: impl Fn(f64, f64) -> f64, x: f64, y: f64, h: f64) -> f64 {
    let l = |a: f64, b: f64| tau(a, b).abs().ln();
    let lap = (l(x + h, y) + l(x - h, y) + l(x, y + h) + l(x, y - h) - 4.0 * l(x, y)) / (h * h);
    1.0 - 0.5 * lap
}

/// Entries of `diag(d, 1/d, s)·g_{α,ℓ₁}(λ)·g_{1/ᾱ,ℓ₂}(λ)` as explicit rational functions.
/// `printed_h22` selects the middle entry exactly as typeset, which carries a misprint.
#[allow(clippy::too_many_arguments)]
pub fn six_pole_entries(alpha: C, b1: C, c1: C, b2: C, c2: C, d: C, lambda: C, s: f64, printed_h22: bool) -> Mat3C {
    let (l, a, ab) = (lambda, alpha, alpha.conj());
    let a2 = real(alpha.norm_sqr());
    let a4 = a2 * a2;
    let one = real(1.0);
    let two = real(2.0);
    let four = real(4.0);
    let d1 = two * b1 * c1 - one;
    let d2 = two * b2 * c2 - one;
    let (l2, l3, l4) = (l * l, l * l * l, l * l * l * l);
    let (a3, ab2, ab3) = (a * a * a, ab * ab, ab * ab * ab);
    let den = (l3 - a3) * (l3 * ab3 - one);
    let s = real(s);
    let mut h = Mat3C::zeros();
    h.0[0][0] = d * ((l3 * d1 + a3) * (l3 * ab3 * d2 + one) + four * l3 * a2 * b2 * c1 * d2 * (b2 * c1 + a2)) / (den * d1 * d2);
    h.0[0][1] = d
        * (two * l2 * ab2 * c2 * c2 * (l3 * d1 + a3)
            + d2 * (two * l2 * a * c1 * c1 * (d2 + l3 * ab3) + four * l2 * a * a * ab * c1 * c2))
        / (den * d1 * d2);
    h.0[0][2] = d
        * (two * l * ab * c2 * (l3 * d1 + a3)
            + d2 * (four * l4 * a * ab2 * b2 * c1 * c1 + two * l * a * a * c1 * (l3 * ab3 + one)))
        / (den * d1 * d2);
    h.0[1][0] = (two * l * a * a * b1 * b1 * (l3 * ab3 * d2 + one)
        + d2 * (two * l * ab * b2 * b2 * (two * a3 * b1 * c1 - a3 + l3) + four * l4 * a * ab2 * b1 * b2))
        / (d * den * d2);
    let last = if printed_h22 { four * l3 * a * ab2 * b1 * b2 } else { four * l3 * a2 * b1 * c2 };
    h.0[1][1] = (four * l3 * a4 * b1 * b1 * c2 * c2 + d2 * ((a3 * d1 + l3) * (d2 + l3 * ab3) + last)) / (d * den * d2);
    h.0[1][2] = (four * l2 * a * a * ab * b1 * b1 * c2
        + d2 * (two * l2 * ab2 * b2 * (two * a3 * b1 * c1 - a3 + l3) + two * l2 * a * b1 * (l3 * ab3 + one)))
        / (d * den * d2);
    h.0[2][0] = s
        * (two * l2 * a * b1 * (l3 * ab3 * d2 + one)
            + d2 * (four * l2 * a * a * ab * b2 * b2 * c1 + two * l2 * ab2 * b2 * (l3 + a3)))
        / (den * d2);
    h.0[2][1] = s
        * (four * l4 * a * ab2 * b1 * c2 * c2
            + d2 * (two * l * a * a * c1 * (l3 * ab3 + d2) + two * l * ab * c2 * (l3 + a3)))
        / (den * d2);
    h.0[2][2] = s * (four * l3 * a2 * b1 * c2 + d2 * (four * l3 * a4 * b2 * c1 + (l3 + a3) * (l3 * ab3 + one))) / (den * d2);
    h
}

/// Roots of the monic cubic `x³ + p₂x² + p₁x + p₀` by Durand–Kerner iteration.
pub fn cubic_roots(p2: C, p1: C, p0: C) -> [C; 3] {
    let f = |x: C| ((x + p2) * x + p1) * x + p0;
    let seed = c(0.4, 0.9);
    let mut r = [real(1.0), seed, seed * seed];
    for _ in 0..500 {
        let prev = r;
        for i in 0..3 {
            let mut den = real(1.0);
            for j in 0..3 {
                if i != j {
                    den *= r[i] - r[j];
                }
            }
            r[i] -= f(r[i]) / den;
        }
        if (0..3).all(|i| (r[i] - prev[i]).norm() < 1e-16 * (1.0 + r[i].norm())) {
            break;
        }
    }
    r
}

/// Determinant as the product of characteristic roots.
pub fn det_by_eigenvalues(m: &Mat3C) -> C {
    let t = m.trace();
    let a = m.0;
    let minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] - a[0][2] * a[2][0] + a[1][1] * a[2][2]
        - a[1][2] * a[2][1];
    let det_via_sarrus = a[0][0] * a[1][1] * a[2][2] + a[0][1] * a[1][2] * a[2][0] + a[0][2] * a[1][0] * a[2][1]
        - a[0][2] * a[1][1] * a[2][0]
        - a[0][0] * a[1][2] * a[2][1]
        - a[0][1] * a[1][0] * a[2][2];
    let roots = cubic_roots(-t, minors, -det_via_sarrus);
    roots[0] * roots[1] * roots[2]
}
