mod common;

use loopdress::algebra::{c, real, Mat3C, Vec3C, C, R3};
use loopdress::loopgroup::{check_twisted, epsilon, p132, TwistSpec};
use loopdress::surfaces::{
    affine_invariants_fd, hildebrand_exp_psi, hildebrand_surface, hildebrand_surface_printed, real_immersion,
    vacuum_f, vacuum_frame, vacuum_immersion, vacuum_immersion_z, volume_scale, BaseSurface, Vacuum,
};
use loopdress::verify::{lambda_linearity_residual, FdSettings};
use rand::Rng;

fn fd() -> FdSettings {
    FdSettings::new(1e-3, true).unwrap()
}

#[test]
fn vacuum_product_is_constant() {
    let mut rng = common::rng(1);
    for _ in 0..100 {
        let z = common::random_c(&mut rng, 2.0);
        let lambda = C::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..6.3));
        let x = vacuum_immersion(z, lambda).unwrap();
        assert!((x[0] * x[1] * x[2] - real(3f64.sqrt() / 72.0)).norm() < 1e-13);
    }
}

#[test]
fn vacuum_derivative_is_diagonal_scaling() {
    let (z, l) = (c(0.4, -0.3), c(0.9, 0.6));
    let x = vacuum_immersion(z, l).unwrap();
    let xz = vacuum_immersion_z(z, l).unwrap();
    let e2 = epsilon().powi(2);
    let expect = Vec3C::new(l * x[0], e2 * l * x[1], e2 * e2 * l * x[2]);
    assert!(xz.dist(&expect) < 1e-15);
}

#[test]
fn vacuum_connection_closed_form() {
    let mut rng = common::rng(2);
    for _ in 0..20 {
        let z = common::random_c(&mut rng, 1.5);
        let l = C::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..6.3));
        let e = vacuum_frame(z, l).unwrap();
        let inv = e.inverse().unwrap();
        let a = inv * common::vacuum_frame_z(z, l);
        let cond = e.max_abs() * inv.max_abs() * (1.0 + l.norm());
        assert!(a.dist(&p132().scale(l)) < 1e-13 * cond, "{}", a.dist(&p132().scale(l)));
        assert!(vacuum_frame(real(0.0), l).unwrap().dist(&Mat3C::identity()) < 1e-15);
    }
}

#[test]
fn vacuum_frame_is_twisted() {
    let mut rng = common::rng(3);
    for _ in 0..10 {
        let z = common::random_c(&mut rng, 1.0);
        let l = C::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..6.3));
        let dev = check_twisted(|m| vacuum_frame(z, m), TwistSpec::Hyperbolic, &[l]).unwrap();
        assert!(dev < 1e-10, "{dev}");
    }
}

#[test]
fn vacuum_connection_is_linear_in_lambda() {
    let ls: Vec<C> = [0.3, 1.4, 2.8, 4.4].iter().map(|t| common::unit(*t)).collect();
    let r = lambda_linearity_residual(vacuum_frame, c(0.2, -0.5), &ls, 1e-5).unwrap();
    assert!(r < 1e-8, "{r}");
}

#[test]
fn real_vacuum_points_lie_on_the_cubic() {
    let spec = TwistSpec::Hyperbolic;
    let lambda = real(1.0);
    let m = (spec.n_matrix() * vacuum_f(real(0.0), lambda).unwrap().inverse().unwrap())
        .scale(volume_scale(spec) * 2.0 / -spec.mean_curvature());
    assert!(m.0.iter().flatten().all(|v| v.im.abs() < 1e-14));
    let back = m.inverse().unwrap();
    for z in [real(0.0), c(0.3, 0.7), c(-1.2, 0.4)] {
        let col = vacuum_frame(z, lambda).unwrap().column(2);
        let p = real_immersion(&col, spec);
        let x = back * Vec3C::from_real(p.0);
        assert!((x[0] * x[1] * x[2] - real(3f64.sqrt() / 72.0)).norm() < 1e-13);
    }
}

#[test]
fn vacuum_surface_invariants() {
    let spec = TwistSpec::Hyperbolic;
    for lambda in [real(1.0), common::unit(0.9), common::unit(2.3)] {
        let surf = |x: f64, y: f64| Ok(real_immersion(&vacuum_frame(c(x, y), lambda)?.column(2), spec));
        for z in [c(0.1, 0.2), c(-0.6, 0.4)] {
            let inv = affine_invariants_fd(surf, z, fd()).unwrap();
            assert!(inv.psi.abs() < 1e-6, "{}", inv.psi);
            assert!((inv.u.norm() - 1.0).abs() < 1e-5, "{}", inv.u.norm());
            assert!(inv.conformal_residual < 1e-6);
        }
    }
    assert_eq!(Vacuum.exp_psi(c(3.0, 1.0)), 1.0);
}

#[test]
fn orientation_of_first_determinant() {
    let spec = TwistSpec::Hyperbolic;
    let lambda = common::unit(0.4);
    let surf = |w: C| Ok(real_immersion(&vacuum_frame(w, lambda)?.column(2), spec));
    let jet = loopdress::verify::wirtinger_jet(surf, c(0.2, 0.1), fd()).unwrap();
    let d = loopdress::det3(&Mat3C::from_columns(jet.f_z, jet.f_zbar, jet.f_zzbar));
    assert!((d - c(0.0, 0.25)).norm() < 1e-6, "{d}");
}

#[test]
fn hildebrand_matches_stated_invariants() {
    let mut rng = common::rng(4);
    for _ in 0..10 {
        let (x, y) = (rng.gen_range(0.3..2.0), rng.gen_range(-1.0..1.0));
        let inv = affine_invariants_fd(hildebrand_surface, c(x, y), fd()).unwrap();
        let expect = hildebrand_exp_psi(x).unwrap();
        assert!((inv.exp_psi() - expect).abs() < 1e-5 * expect);
        assert!((inv.u.norm() - 1.0).abs() < 1e-4);
        assert!(inv.conformal_residual < 1e-6 * (2.0 * inv.psi).exp());
    }
}

#[test]
fn printed_hildebrand_chart_is_a_homothetic_copy() {
    let inv = affine_invariants_fd(hildebrand_surface_printed, c(0.8, 0.2), fd()).unwrap();
    let expect = hildebrand_exp_psi(0.8).unwrap();
    assert!((inv.exp_psi() / expect - 2.0).abs() < 1e-5);
    assert!((inv.u.norm() - 2.0).abs() < 1e-4);
}

#[test]
fn equiaffine_images_keep_invariants() {
    let a = Mat3C::from_real([[2.0, 0.3, -1.0], [0.0, 0.5, 0.2], [0.4, 0.0, 1.0]]);
    let a = a.scale(real(1.0 / a.det().re.cbrt()));
    assert!((a.det() - real(1.0)).norm() < 1e-13);
    let moved = |x: f64, y: f64| -> loopdress::Result<R3> {
        let p = hildebrand_surface(x, y)?;
        Ok((a * Vec3C::from_real(p.0)).re() + R3([1.0, -2.0, 0.5]))
    };
    let z = c(0.9, -0.3);
    let base = affine_invariants_fd(hildebrand_surface, z, fd()).unwrap();
    let image = affine_invariants_fd(moved, z, fd()).unwrap();
    assert!((base.psi - image.psi).abs() < 1e-6);
    assert!((base.u.norm() - image.u.norm()).abs() < 1e-6);
}

#[test]
fn hildebrand_transcription_cross_check() {
    let (x, y) = (0.7f64, 0.3f64);
    let t = 3f64.sqrt() * x;
    let csch = 1.0 / t.sinh();
    let cosh = t.cosh();
    let k = 2f64.powf(-2.0 / 3.0) / 3f64.sqrt();
    let expect = [k * csch * (t.sinh().powi(2) + 3.0 * y) * y.exp(), -k * csch * cosh * (-2.0 * y).exp(), -k * csch * y.exp()];
    let got = hildebrand_surface(x, y).unwrap();
    for i in 0..3 {
        assert!((got[i] - expect[i]).abs() < 1e-14);
    }
}
