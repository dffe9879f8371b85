mod common;

use loopdress::algebra::{c, real, Mat3C, C};
use loopdress::dressing::{NodeStatus, SixPoleDressing, ThreePoleDressing};
use loopdress::loopgroup::{check_twisted, derive_sixpole_line1, ProjLine, Rank, SimpleElement, SixPoleElement, TwistSpec};
use loopdress::surfaces::{affine_invariants_fd, real_immersion, vacuum_frame, Vacuum};
use loopdress::verify::{lambda_linearity_residual, FdSettings};
use loopdress::{Error, GridSpec};
use rand::Rng;

fn one_soliton() -> ThreePoleDressing<Vacuum> {
    let e = SimpleElement::unit_circle(c(0.0, 1.0), c(-0.5, 1.0), Rank::One).unwrap();
    ThreePoleDressing::new(e, Vacuum).unwrap()
}

fn two_soliton() -> ThreePoleDressing<Vacuum> {
    let e = SimpleElement::unit_circle(c(0.0, 1.0), c(1.0, 1.0), Rank::Two).unwrap();
    ThreePoleDressing::new(e, Vacuum).unwrap()
}

fn six_pole() -> SixPoleDressing<Vacuum> {
    let line2 = ProjLine::new(c(0.5, common::sqrt3() / 2.0), real(0.0)).unwrap();
    let e = SixPoleElement::new(c(0.0, -0.5), line2, TwistSpec::Hyperbolic).unwrap();
    SixPoleDressing::new(e, Vacuum).unwrap()
}

fn fd() -> FdSettings {
    FdSettings::new(1e-3, true).unwrap()
}

#[test]
fn one_soliton_metric_matches_closed_form() {
    let grid = GridSpec::square(-2.0, 2.0, 41).unwrap();
    let m = one_soliton().metric(grid);
    assert_eq!(m.count(NodeStatus::Admissible), grid.len());
    let mut worst = 0.0f64;
    for (i, j) in grid.nodes() {
        let expect = common::metric_one_soliton_closed_form(grid.x(i));
        worst = worst.max((m.h.get(i, j).re - expect).abs() / expect.abs());
    }
    assert!(worst < 1e-9, "{worst}");
}

#[test]
fn one_soliton_origin_and_lines() {
    let d = one_soliton();
    assert!((d.at(real(0.0)).unwrap().h - 1.5).abs() < 1e-14);
    let mut rng = common::rng(11);
    for _ in 0..20 {
        let z = common::random_c(&mut rng, 2.0);
        let r = d.at(z).unwrap();
        assert!((r.line_tilde.c() - r.line_tilde.b().conj()).norm() < 1e-12 * (1.0 + r.line_tilde.b().norm()));
        let shifted = d.at(c(z.re, z.im + 0.7)).unwrap();
        assert!((r.h - shifted.h).abs() < 1e-12 * r.h.abs());
    }
}

#[test]
fn gauge_phase_leaves_metric_unchanged() {
    let d = one_soliton();
    let e = d.element();
    let rotated = e.with_d(e.d() * common::unit(0.8)).unwrap();
    let other = ThreePoleDressing::new(rotated, Vacuum).unwrap();
    for z in [c(0.3, 0.1), c(-1.1, 0.9)] {
        assert!((d.at(z).unwrap().h - other.at(z).unwrap().h).abs() < 1e-13);
    }
}

#[test]
fn dressed_frames_are_well_defined() {
    let mut rng = common::rng(12);
    for d in [one_soliton(), two_soliton()] {
        let mut checked = 0;
        while checked < 10 {
            let z = common::random_c(&mut rng, 0.8);
            if !d.at(z).unwrap().admissible {
                continue;
            }
            checked += 1;
            for r in d.lemma_residues(z).unwrap() {
                assert!(r.max_abs() < 1e-10, "{}", r.max_abs());
            }
            let l = C::from_polar(rng.gen_range(0.6..1.6), rng.gen_range(0.0..6.3));
            let dev = check_twisted(|m| d.frame(z, m), TwistSpec::Hyperbolic, &[l]).unwrap();
            assert!(dev < 1e-9, "{dev}");
        }
        let ls: Vec<C> = [0.4, 1.3, 2.9, 4.1].iter().map(|t| common::unit(*t)).collect();
        let r = lambda_linearity_residual(|w, l| d.frame(w, l), c(0.3, -0.2), &ls, 1e-5).unwrap();
        assert!(r < 1e-7, "{r}");
    }
}

#[test]
fn closed_form_column_matches_frame_route() {
    let mut rng = common::rng(13);
    for d in [one_soliton(), two_soliton()] {
        for _ in 0..10 {
            let z = common::random_c(&mut rng, 1.0);
            let l = C::from_polar(rng.gen_range(0.5..0.8), rng.gen_range(0.0..6.3));
            let a = d.frame(z, l).unwrap().column(2);
            let b = d.immersion_column(z, l).unwrap();
            assert!(a.dist(&b) < 1e-10 * a.max_abs());
        }
    }
}

#[test]
fn two_soliton_scale_solution_matches_printed() {
    let d = two_soliton();
    let mut rng = common::rng(14);
    let ratio0 = {
        let (phi, _, _) = d.scale_solution(c(0.4, 0.3)).unwrap();
        phi / common::phi_two_soliton_printed(0.4, 0.3)
    };
    assert!((ratio0 - real(1.0)).norm() < 1e-12, "{ratio0}");
    for _ in 0..20 {
        let (x, y) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let (phi, _, _) = d.scale_solution(c(x, y)).unwrap();
        let printed = common::phi_two_soliton_printed(x, y);
        assert!((phi - ratio0 * printed).norm() < 1e-12 * (1.0 + phi.norm()), "{phi} {printed}");
    }
}

#[test]
fn dressed_surface_has_the_new_metric() {
    let mut rng = common::rng(15);
    for d in [one_soliton(), two_soliton()] {
        for lambda in [real(1.0), common::unit(1.1)] {
            let surf = |x: f64, y: f64| d.immersion(c(x, y), lambda);
            let mut checked = 0;
            while checked < 10 {
                let z = common::random_c(&mut rng, 1.0);
                let node = d.at(z).unwrap();
                if !node.admissible || !(0.2..10.0).contains(&node.h) {
                    continue;
                }
                let inv = affine_invariants_fd(surf, z, fd()).unwrap();
                assert!((inv.exp_psi() - node.h).abs() < 1e-4 * node.h.max(1.0), "{} {}", inv.exp_psi(), node.h);
                assert!((inv.u.norm() - 1.0).abs() < 1e-4, "{} z={z} l={lambda} h={} {:?}", inv.u.norm(), node.h, d.element().rank());
                checked += 1;
            }
        }
    }
}

#[test]
fn six_pole_origin_is_identity() {
    let d = six_pole();
    let r = d.at(real(0.0)).unwrap();
    let e = d.element();
    assert!((r.line1_tilde.b() - e.line1().b()).norm() < 1e-14);
    assert!((r.line2_tilde.c() - e.line2().c()).norm() < 1e-14);
    assert!((r.d_tilde().unwrap() - e.d()).abs() < 1e-12);
    assert!(d.frame(real(0.0), c(0.3, 0.9)).unwrap().dist(&Mat3C::identity()) < 1e-12);
}

#[test]
fn six_pole_lines_keep_the_derived_relation() {
    let d = six_pole();
    let mut rng = common::rng(16);
    for _ in 0..15 {
        let z = common::random_c(&mut rng, 0.6);
        let r = d.at(z).unwrap();
        if !r.admissible {
            continue;
        }
        let (line1, d2) = derive_sixpole_line1(d.element().alpha(), &r.line2_tilde, TwistSpec::Hyperbolic).unwrap();
        assert!((line1.b() - r.line1_tilde.b()).norm() < 1e-9 * (1.0 + line1.b().norm()));
        assert!((line1.c() - r.line1_tilde.c()).norm() < 1e-9 * (1.0 + line1.c().norm()));
        assert!(r.product.im.abs() < 1e-9 * r.product.norm());
        assert!((r.product.re - d2).abs() < 1e-9 * d2.abs());
    }
}

#[test]
fn six_pole_closed_form_matches_frame_route() {
    let d = six_pole();
    let mut rng = common::rng(17);
    let mut checked = 0;
    while checked < 10 {
        let z = common::random_c(&mut rng, 0.5);
        if !d.at(z).unwrap().admissible {
            continue;
        }
        checked += 1;
        let l = C::from_polar(rng.gen_range(0.5..0.8), rng.gen_range(0.0..6.3));
        let a = d.frame(z, l).unwrap().column(2);
        let b = d.immersion_column(z, l).unwrap();
        assert!(a.dist(&b) < 1e-9 * a.max_abs());
        let dev = check_twisted(|m| d.frame(z, m), TwistSpec::Hyperbolic, &[l]).unwrap();
        assert!(dev < 1e-9, "{dev}");
    }
}

#[test]
fn six_pole_surface_has_the_new_metric() {
    let d = six_pole();
    let surf = |x: f64, y: f64| d.immersion(c(x, y), real(1.0));
    for z in [c(0.1, 0.2), c(0.0, -0.2), c(-0.2, 0.1)] {
        let node = d.at(z).unwrap();
        assert!(node.admissible);
        let inv = affine_invariants_fd(surf, z, fd()).unwrap();
        assert!((inv.exp_psi() - node.h).abs() < 1e-4 * node.h.max(1.0), "{} {}", inv.exp_psi(), node.h);
        assert!((inv.u.norm() - 1.0).abs() < 1e-4);
    }
}

#[test]
fn trivial_six_pole_dressing_is_an_affine_image() {
    let line = ProjLine::new(real(1.0), real(1.0)).unwrap();
    let e = SixPoleElement::new(c(0.0, -0.5), line, TwistSpec::Hyperbolic).unwrap();
    assert!(e.is_trivial());
    let d = SixPoleDressing::new(e, Vacuum).unwrap();
    let mut rng = common::rng(18);
    for _ in 0..25 {
        let z = common::random_c(&mut rng, 1.0);
        let r = d.at(z).unwrap();
        for l in [r.line1_tilde, r.line2_tilde] {
            assert!((l.b() - real(1.0)).norm() < 1e-10 && (l.c() - real(1.0)).norm() < 1e-10);
        }
    }
    for lambda in [real(1.0), common::unit(0.6)] {
        for z in [c(0.2, 0.1), c(-0.7, 0.5)] {
            let dressed = d.immersion(z, lambda).unwrap();
            let base = real_immersion(&vacuum_frame(z, lambda).unwrap().column(2), TwistSpec::Hyperbolic);
            assert!((dressed - base).norm_inf() < 1e-10 * (1.0 + base.norm_inf()));
        }
    }
}

#[test]
fn six_pole_rejects_unit_circle_pole() {
    let line = ProjLine::new(c(0.5, 0.2), real(0.0)).unwrap();
    let err = SixPoleElement::new(c(0.0, 1.0), line, TwistSpec::Hyperbolic).unwrap_err();
    assert!(err.to_string().contains("six-pole element requires |alpha| != 1"));
}

#[test]
fn dressing_refuses_inconsistent_twist() {
    let e = SimpleElement::unit_circle(c(0.0, 1.0), c(-0.5, 1.0), Rank::One).unwrap();
    assert!(matches!(ThreePoleDressing::with_spec(e, Vacuum, TwistSpec::Elliptic), Err(Error::TwistMismatch)));
    let line = ProjLine::new(c(0.5, 0.2), real(0.0)).unwrap();
    let e6 = SixPoleElement::new(c(0.0, -0.5), line, TwistSpec::Elliptic);
    if let Ok(e6) = e6 {
        assert!(matches!(SixPoleDressing::new(e6, Vacuum), Err(Error::TwistMismatch)));
    }
}

#[test]
fn surface_at_a_pole_is_the_continuous_limit() {
    let i = c(0.0, 1.0);
    let delta = 1e-4;
    for d in [one_soliton(), two_soliton()] {
        for z in [c(0.3, 0.2), c(-0.4, 0.5)] {
            let at_pole = d.immersion_column(z, i).unwrap();
            let side = |t: f64| d.immersion_column(z, i * common::unit(t)).unwrap();
            let mid = (side(delta) + side(-delta)).scale(real(0.5));
            assert!(at_pole.dist(&mid) < 1e-7 * at_pole.max_abs(), "{}", at_pole.dist(&mid));
        }
        let surf = |x: f64, y: f64| d.immersion(c(x, y), i);
        for z in [c(0.2, 0.1), c(-0.5, -0.3)] {
            let node = d.at(z).unwrap();
            if !node.admissible || !(0.2..10.0).contains(&node.h) {
                continue;
            }
            let inv = affine_invariants_fd(surf, z, fd()).unwrap();
            assert!((inv.exp_psi() - node.h).abs() < 1e-4 * node.h.max(1.0), "{} {}", inv.exp_psi(), node.h);
            assert!((inv.u.norm() - 1.0).abs() < 1e-4);
        }
    }
    let d = six_pole();
    let alpha = d.element().alpha();
    let z = c(0.1, 0.2);
    let at_pole = d.immersion_column(z, alpha).unwrap();
    let side = |t: f64| d.immersion_column(z, alpha * common::unit(t)).unwrap();
    let mid = (side(delta) + side(-delta)).scale(real(0.5));
    assert!(at_pole.dist(&mid) < 1e-7 * at_pole.max_abs());
}
