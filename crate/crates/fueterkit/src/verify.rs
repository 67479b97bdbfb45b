//! Named property checks covering every invariant of the library, grouped
//! into suites for the `verify` CLI subcommand and reused by the acceptance
//! tests. Randomness is seeded so repeated runs are bit-identical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::contour::{
    cauchy_eval, contour_independence_check, fueter_integral_eval, polyanalytic_integral_eval,
    SliceContour,
};
use crate::error::Result;
use crate::finite_diff::{
    fd_apply, fd_apply_right, residual_suite, slice_cr_residual, vekua2_residual, FdConfig,
    FdOperator, ResidualKind,
};
use crate::kernel::{
    appell_kernel_series, cauchy_kernel_series, dbar_kernel_series, dbar_series_tail, kernel_eval,
    qcs, KernelKind,
};
use crate::opcalc::{
    appell_operator_series, calculus_apply, calculus_apply_monomials, default_contour,
    f_monomial_oracle, p2_monomial_oracle, resolvent_eval, s_monomial_oracle, s_spectrum,
    series_oracle, Calculus, CommutingOperator, OperatorSeries, QuaternionMatrix,
};
use crate::quaternion::{ImaginaryUnit, Quaternion, E1, E2, E3, JE1, JE2, ONE};
use crate::slice_function::SliceFunction;
use crate::symbolic::{
    appell, apply_operator_sym, d_monomial, dbar_monomial, dbar_monomial_appell,
    laplacian_monomial, polyanalytic_split, rat, rat_int, FueterOp, LaplacianForm, QQbarPoly,
};
use crate::Side;

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub check: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    fn new(check: &'static str, max_residual: f64, tolerance: f64) -> Self {
        Self {
            check,
            max_residual,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }
}

/// Check suites selectable from the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Symbolic,
    Contour,
    Operator,
}

impl Suite {
    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "all" => Ok(Self::All),
            "symbolic" => Ok(Self::Symbolic),
            "contour" => Ok(Self::Contour),
            "operator" => Ok(Self::Operator),
            other => Err(crate::error::Error::InvalidInput(format!(
                "unknown suite '{other}'"
            ))),
        }
    }

    fn contains(self, name: &str) -> bool {
        let group = name.split('/').next().unwrap_or("");
        match self {
            Suite::All => true,
            Suite::Symbolic => matches!(group, "quaternion" | "symbolic" | "finite-diff"),
            Suite::Contour => matches!(group, "stem" | "kernel" | "contour" | "pde"),
            Suite::Operator => group == "opcalc",
        }
    }
}

fn c_rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt))
}

fn rand_quat<R: Rng>(rng: &mut R, scale: f64) -> Quaternion {
    Quaternion::new(
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
        rng.random_range(-scale..scale),
    )
}

fn rel_err(got: Quaternion, expect: Quaternion) -> f64 {
    (got - expect).norm() / (1.0 + expect.norm())
}

fn rel_err_qm(got: &QuaternionMatrix, expect: &QuaternionMatrix) -> f64 {
    got.sub(expect).frobenius_norm() / (1.0 + expect.frobenius_norm())
}

fn mixed_unit() -> ImaginaryUnit {
    ImaginaryUnit::from_components(1.0, 0.0, 1.0).expect("nonzero direction")
}

fn diag_unit() -> ImaginaryUnit {
    ImaginaryUnit::from_components(1.0, 1.0, 1.0).expect("nonzero direction")
}

// ---------------------------------------------------------------------------
// quaternion/*
// ---------------------------------------------------------------------------

pub fn check_quat_associativity(seed: u64) -> Check {
    let mut rng = c_rng(seed, 1);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let (a, b, c) = (
            rand_quat(&mut rng, 3.0),
            rand_quat(&mut rng, 3.0),
            rand_quat(&mut rng, 3.0),
        );
        let res = ((a * b) * c - a * (b * c)).norm() / (1.0 + a.norm() * b.norm() * c.norm());
        worst = worst.max(res);
    }
    Check::new("quaternion/mul-associativity", worst, 1e-14)
}

pub fn check_quat_norm_multiplicative(seed: u64) -> Check {
    let mut rng = c_rng(seed, 2);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let (a, b) = (rand_quat(&mut rng, 3.0), rand_quat(&mut rng, 3.0));
        let res = ((a * b).norm() - a.norm() * b.norm()).abs() / (1.0 + a.norm() * b.norm());
        worst = worst.max(res);
    }
    Check::new("quaternion/norm-multiplicative", worst, 1e-14)
}

pub fn check_quat_conj_anti_automorphism(seed: u64) -> Check {
    // Small-integer components keep every product exact in f64, so the
    // anti-automorphism identity must hold with residual zero.
    let mut rng = c_rng(seed, 3);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let mut int_quat = || {
            Quaternion::new(
                rng.random_range(-8..9) as f64,
                rng.random_range(-8..9) as f64,
                rng.random_range(-8..9) as f64,
                rng.random_range(-8..9) as f64,
            )
        };
        let (a, b) = (int_quat(), int_quat());
        worst = worst.max(((a * b).conj() - b.conj() * a.conj()).norm());
    }
    Check::new("quaternion/conj-anti-automorphism", worst, 0.0)
}

pub fn check_quat_slice_roundtrip(seed: u64) -> Check {
    let mut rng = c_rng(seed, 4);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let q = rand_quat(&mut rng, 4.0);
        let res = (q.slice_decompose().compose() - q).norm() / (1.0 + q.norm());
        worst = worst.max(res);
    }
    Check::new("quaternion/slice-roundtrip", worst, 1e-15)
}

pub fn check_quat_unit_square(seed: u64) -> Check {
    let mut rng = c_rng(seed, 24);
    let mut worst = 0.0f64;
    for _ in 0..200 {
        let q = rand_quat(&mut rng, 4.0);
        if let Some(j) = q.slice_decompose().j {
            let jj = j.as_quaternion() * j.as_quaternion();
            worst = worst.max((jj + ONE).norm());
        }
    }
    Check::new("quaternion/unit-square", worst, 1e-14)
}

// ---------------------------------------------------------------------------
// symbolic/*
// ---------------------------------------------------------------------------

fn q_power_axial(n: u32) -> crate::symbolic::AxialPoly {
    QQbarPoly::monomial(n, 0, rat_int(1)).to_axial()
}

pub fn check_dbar_monomial_closed_form(_seed: u64) -> Check {
    let mut mismatches = 0.0;
    for n in 1..=20i64 {
        let sym = apply_operator_sym(FueterOp::Dbar, &q_power_axial(n as u32)).to_qqbar();
        if sym != dbar_monomial(n).expect("n >= 1") {
            mismatches += 1.0;
        }
        let sym_d = apply_operator_sym(FueterOp::D, &q_power_axial(n as u32)).to_qqbar();
        if sym_d != d_monomial(n).expect("n >= 1") {
            mismatches += 1.0;
        }
    }
    Check::new("symbolic/dbar-monomial-closed-form", mismatches, 0.0)
}

pub fn check_dbar_appell_decomposition(_seed: u64) -> Check {
    let mut mismatches = 0.0;
    for n in 2..=20 {
        if dbar_monomial(n).expect("n >= 1") != dbar_monomial_appell(n).expect("n >= 2") {
            mismatches += 1.0;
        }
    }
    // Worked low-degree instances.
    let mut n2 = QQbarPoly::monomial(1, 0, rat_int(6));
    n2.add_term(0, 1, rat_int(2));
    if dbar_monomial(2).expect("ok") != n2 {
        mismatches += 1.0;
    }
    let mut n3 = QQbarPoly::monomial(2, 0, rat_int(8));
    n3.add_term(1, 1, rat_int(2));
    n3.add_term(0, 2, rat_int(2));
    if dbar_monomial(3).expect("ok") != n3 {
        mismatches += 1.0;
    }
    Check::new("symbolic/dbar-appell-decomposition", mismatches, 0.0)
}

pub fn check_laplacian_two_routes(_seed: u64) -> Check {
    let mut mismatches = 0.0;
    for n in 1..=20i64 {
        let ax = q_power_axial(n as u32);
        let ddbar = apply_operator_sym(FueterOp::D, &apply_operator_sym(FueterOp::Dbar, &ax));
        let dbard = apply_operator_sym(FueterOp::Dbar, &apply_operator_sym(FueterOp::D, &ax));
        let delta = apply_operator_sym(FueterOp::Delta, &ax);
        if ddbar != dbard || ddbar != delta {
            mismatches += 1.0;
        }
        if n >= 2 {
            let direct = laplacian_monomial(n, LaplacianForm::Direct).expect("n >= 2");
            let via_appell = laplacian_monomial(n, LaplacianForm::Appell).expect("n >= 2");
            if direct != via_appell || delta.to_qqbar() != direct {
                mismatches += 1.0;
            }
        }
    }
    if laplacian_monomial(2, LaplacianForm::Direct).expect("ok") != QQbarPoly::constant(rat_int(-4))
    {
        mismatches += 1.0;
    }
    Check::new("symbolic/laplacian-two-routes", mismatches, 0.0)
}

pub fn check_appell_monogenic(_seed: u64) -> Check {
    let mut mismatches = 0.0;
    for ell in 0..=20 {
        if !apply_operator_sym(FueterOp::D, &appell(ell).to_axial()).is_zero() {
            mismatches += 1.0;
        }
    }
    Check::new("symbolic/appell-monogenic", mismatches, 0.0)
}

pub fn check_dbar_in_kernel_of_d2(_seed: u64) -> Check {
    let mut mismatches = 0.0;
    for n in 1..=20 {
        let p = dbar_monomial(n).expect("n >= 1").to_axial();
        let d2 = apply_operator_sym(FueterOp::D, &apply_operator_sym(FueterOp::D, &p));
        if !d2.is_zero() {
            mismatches += 1.0;
        }
        // The polyanalytic decomposition must therefore exist, recompose,
        // and have monogenic parts.
        match polyanalytic_split(&p) {
            Ok((f0, f1)) => {
                if !apply_operator_sym(FueterOp::D, &f0).is_zero()
                    || !apply_operator_sym(FueterOp::D, &f1).is_zero()
                    || f0.add(&f1.mul_q0()) != p
                {
                    mismatches += 1.0;
                }
            }
            Err(_) => mismatches += 1.0,
        }
    }
    Check::new("symbolic/dbar-in-kernel-of-d2", mismatches, 0.0)
}

fn random_poly<R: Rng>(rng: &mut R) -> QQbarPoly {
    let mut p = QQbarPoly::zero();
    for _ in 0..rng.random_range(1..6) {
        p.add_term(
            rng.random_range(0..4),
            rng.random_range(0..4),
            rat_int(rng.random_range(-6..7)),
        );
    }
    p
}

pub fn check_axial_roundtrip(seed: u64) -> Check {
    let mut rng = c_rng(seed, 5);
    let mut mismatches = 0.0;
    for _ in 0..100 {
        let p = random_poly(&mut rng);
        let ax = p.to_axial();
        if ax.to_qqbar() != p {
            mismatches += 1.0;
        }
        // Exact evaluation agreement at a random rational point.
        let q0 = rat(rng.random_range(-6..7), rng.random_range(1..4));
        let r = rat(rng.random_range(-6..7), rng.random_range(1..4));
        if p.eval_exact(&q0, &r) != ax.eval_exact(&q0, &r) {
            mismatches += 1.0;
        }
    }
    Check::new("symbolic/axial-roundtrip-and-eval", mismatches, 0.0)
}

pub fn check_right_action_commutation(seed: u64) -> Check {
    // The right action of the conjugate operator on intrinsic monomials
    // agrees with the left action and with the closed form.
    let mut rng = c_rng(seed, 6);
    let mut worst = 0.0f64;
    for n in 1..=8u32 {
        let expect_poly = dbar_monomial(n as i64).expect("n >= 1");
        for _ in 0..4 {
            let mut q = rand_quat(&mut rng, 1.2);
            q.x += 0.4; // keep away from the real axis
            let f = |p: Quaternion| p.powu(n);
            let cfg = FdConfig::scaled_to(q);
            let right = fd_apply_right(FdOperator::Dbar, &f, q, cfg);
            let left = fd_apply(FdOperator::Dbar, &f, q, cfg);
            let expect = expect_poly.eval_quat(q);
            let scale = 1.0 + expect.norm() + q.norm();
            worst = worst.max((right - expect).norm() / scale);
            worst = worst.max((right - left).norm() / scale);
        }
    }
    Check::new("symbolic/right-action-commutation", worst, 1e-6)
}

// ---------------------------------------------------------------------------
// finite-diff/*
// ---------------------------------------------------------------------------

pub fn check_fd_matches_symbolic(seed: u64) -> Check {
    let mut rng = c_rng(seed, 7);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let p = random_poly(&mut rng);
        let ax = p.to_axial();
        let exact = apply_operator_sym(FueterOp::Dbar, &ax);
        let q = rand_quat(&mut rng, 1.5);
        let f = |pt: Quaternion| p.eval_quat(pt);
        let fd = fd_apply(FdOperator::Dbar, &f, q, FdConfig::scaled_to(q));
        let expect = exact.eval_quat(q);
        worst = worst.max((fd - expect).norm() / (1.0 + expect.norm() + q.norm()));
    }
    Check::new("finite-diff/matches-symbolic-dbar", worst, 1e-6)
}

pub fn check_fd_delta_composition(seed: u64) -> Check {
    let mut rng = c_rng(seed, 8);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let p = random_poly(&mut rng);
        let q = rand_quat(&mut rng, 1.2);
        let f = |pt: Quaternion| p.eval_quat(pt);
        let cfg = FdConfig::scaled_to(q);
        let inner_cfg = FdConfig {
            h1: cfg.h2,
            h2: cfg.h2,
        };
        let delta = fd_apply(FdOperator::Delta, &f, q, cfg);
        let d_of_dbar = fd_apply(
            FdOperator::D,
            &|pt: Quaternion| fd_apply(FdOperator::Dbar, &f, pt, inner_cfg),
            q,
            inner_cfg,
        );
        let dbar_of_d = fd_apply(
            FdOperator::Dbar,
            &|pt: Quaternion| fd_apply(FdOperator::D, &f, pt, inner_cfg),
            q,
            inner_cfg,
        );
        let scale = 1.0 + delta.norm() + q.norm();
        worst = worst.max((d_of_dbar - delta).norm() / scale);
        worst = worst.max((dbar_of_d - delta).norm() / scale);
    }
    Check::new("finite-diff/delta-composition", worst, 1e-4)
}

pub fn check_fd_richardson(_seed: u64) -> Check {
    // Halving the step of a second-order stencil should shrink the error
    // by about 4; assert the observed order through log4 of the ratio.
    let q = Quaternion::new(0.9, 0.5, -0.7, 0.2);
    let truth = apply_operator_sym(FueterOp::Dbar, &q_power_axial(4)).eval_quat(q);
    let f = |pt: Quaternion| pt.powu(4);
    let err =
        |h: f64| (fd_apply(FdOperator::Dbar, &f, q, FdConfig { h1: h, h2: h }) - truth).norm();
    let ratio = err(1e-3) / err(5e-4);
    Check::new(
        "finite-diff/richardson-order",
        (ratio.log2() / 2.0 - 1.0).abs(),
        0.5,
    )
}

// ---------------------------------------------------------------------------
// stem/*
// ---------------------------------------------------------------------------

pub fn check_stem_representation_consistency(_seed: u64) -> Check {
    let stems = [
        SliceFunction::from_name("pow3").expect("builtin"),
        SliceFunction::from_name("exp").expect("builtin"),
        SliceFunction::from_name("rational:1,0,1/2,1").expect("builtin"),
    ];
    let units = [JE1, JE2, mixed_unit()];
    let mut worst = 0.0f64;
    for f in &stems {
        for &(u, v) in &[(0.8, 1.7), (-0.4, 0.6), (1.5, 0.2)] {
            let mut parts = Vec::new();
            for j in units {
                let q = j.embed(u, v);
                let val = f.eval(q).expect("in domain");
                let alpha = val.w;
                let beta = (val.imag() * j.as_quaternion().conj()).w;
                parts.push((alpha, beta));
            }
            for w in parts.windows(2) {
                let scale = 1.0 + w[0].0.abs() + w[0].1.abs();
                worst = worst.max((w[0].0 - w[1].0).abs() / scale);
                worst = worst.max((w[0].1 - w[1].1).abs() / scale);
            }
        }
    }
    Check::new("stem/representation-consistency", worst, 1e-13)
}

pub fn check_stem_cauchy_riemann(_seed: u64) -> Check {
    let stems = [
        SliceFunction::from_name("pow5").expect("builtin"),
        SliceFunction::from_name("exp").expect("builtin"),
        SliceFunction::from_name("rational:1,1/3,0,1").expect("builtin"),
    ];
    let mut worst = 0.0f64;
    for f in &stems {
        let SliceFunction::Intrinsic(stem) = f else {
            unreachable!()
        };
        for &u in &[-0.6f64, 0.2, 1.0] {
            for &v in &[0.4, 1.0, 1.8] {
                let h = 1e-5 * (1.0 + u.hypot(v));
                let ab = |uu: f64, vv: f64| stem.eval_ab(uu, vv).expect("in domain");
                let (a_up, b_up) = ab(u + h, v);
                let (a_dn, b_dn) = ab(u - h, v);
                let (a_vp, b_vp) = ab(u, v + h);
                let (a_vm, b_vm) = ab(u, v - h);
                let du_a = (a_up - a_dn) / (2.0 * h);
                let du_b = (b_up - b_dn) / (2.0 * h);
                let dv_a = (a_vp - a_vm) / (2.0 * h);
                let dv_b = (b_vp - b_vm) / (2.0 * h);
                let (a0, b0) = ab(u, v);
                let scale = 1.0 + a0.abs() + b0.abs() + u.hypot(v);
                worst = worst.max((du_a - dv_b).abs() / scale);
                worst = worst.max((dv_a + du_b).abs() / scale);
            }
        }
    }
    Check::new("stem/cauchy-riemann-residual", worst, 1e-6)
}

pub fn check_stem_powers(seed: u64) -> Check {
    let mut rng = c_rng(seed, 9);
    let mut worst = 0.0f64;
    for n in 0..=10u32 {
        let f = SliceFunction::from_name(&format!("pow{n}")).expect("builtin");
        for _ in 0..5 {
            let q = rand_quat(&mut rng, 1.4);
            let expect = q.powu(n);
            worst = worst.max(rel_err(f.eval(q).expect("entire"), expect));
        }
    }
    Check::new("stem/powers-match-quaternion-powers", worst, 1e-12)
}

// ---------------------------------------------------------------------------
// kernel/*
// ---------------------------------------------------------------------------

fn random_kernel_pair<R: Rng>(rng: &mut R) -> (Quaternion, Quaternion) {
    // |q| <= 2 and |s| in [2.5, 4.5] keeps s off the sphere [q].
    let q = rand_quat(rng, 1.0);
    let mut s = rand_quat(rng, 1.0);
    if s.norm() < 1e-3 {
        s = ONE;
    }
    let s = s * (rng.random_range(2.5..4.5) / s.norm());
    (s, q * 2.0)
}

pub fn check_fl_commutation_identity(seed: u64) -> Check {
    let mut rng = c_rng(seed, 10);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let (s, q) = random_kernel_pair(&mut rng);
        let fl = kernel_eval(KernelKind::FL, s, q).expect("off sphere");
        let lhs = fl * s - q * fl;
        let rhs = qcs(s, q).inv().expect("off sphere") * -4.0;
        worst = worst.max((lhs - rhs).norm() / (1.0 + rhs.norm()));
    }
    Check::new("kernel/fl-commutation-identity", worst, 1e-11)
}

pub fn check_p2_is_fd_dbar_of_cauchy_kernel(seed: u64) -> Check {
    let mut rng = c_rng(seed, 11);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let (s, q) = random_kernel_pair(&mut rng);
        let cfg = FdConfig::scaled_to(q);
        let sl = |p: Quaternion| kernel_eval(KernelKind::SL, s, p).expect("off sphere");
        let fd = fd_apply(FdOperator::Dbar, &sl, q, cfg);
        let p2l = kernel_eval(KernelKind::P2L, s, q).expect("off sphere");
        worst = worst.max(rel_err(fd, p2l));
        // Mirrored: the right action on SR gives P2R.
        let sr = |p: Quaternion| kernel_eval(KernelKind::SR, s, p).expect("off sphere");
        let fd_r = fd_apply_right(FdOperator::Dbar, &sr, q, cfg);
        let p2r = kernel_eval(KernelKind::P2R, s, q).expect("off sphere");
        worst = worst.max(rel_err(fd_r, p2r));
    }
    Check::new("kernel/p2-is-fd-dbar-of-cauchy-kernel", worst, 1e-6)
}

pub fn check_p2_d2_residual(seed: u64) -> Check {
    let mut rng = c_rng(seed, 12);
    let s = Quaternion::new(2.8, 0.7, 0.0, -0.4);
    let samples: Vec<Quaternion> = (0..12).map(|_| rand_quat(&mut rng, 0.9)).collect();
    let p2l = |p: Quaternion| kernel_eval(KernelKind::P2L, s, p).expect("off sphere");
    let report = residual_suite(&p2l, ResidualKind::Polyanalytic2, &samples);
    // The F-kernel itself must be monogenic in q.
    let fl = |p: Quaternion| kernel_eval(KernelKind::FL, s, p).expect("off sphere");
    let mono = residual_suite(&fl, ResidualKind::Monogenic, &samples);
    Check::new(
        "kernel/p2-d2-residual",
        report.max_residual.max(mono.max_residual),
        1e-4,
    )
}

pub fn check_p2_right_slice_cr_in_s(_seed: u64) -> Check {
    // s -> P2L(s, q) is right slice hyperholomorphic away from [q].
    let q = Quaternion::new(0.3, 0.0, 0.4, 0.0);
    let mut worst = 0.0f64;
    for j in [JE1, JE2, mixed_unit()] {
        for &(u, v) in &[(2.0f64, 1.0), (-1.5, 2.0), (0.4, 2.6)] {
            let f = |s: Quaternion| kernel_eval(KernelKind::P2L, s, q).expect("off sphere");
            let h = 1e-5 * (1.0 + u.hypot(v));
            let res = slice_cr_residual(&f, u, v, j, Side::Right, h);
            let scale = 1.0 + f(j.embed(u, v)).norm();
            worst = worst.max(res / scale);
            // Mirrored: s -> P2R(s, q) is left slice hyperholomorphic.
            let g = |s: Quaternion| kernel_eval(KernelKind::P2R, s, q).expect("off sphere");
            let res = slice_cr_residual(&g, u, v, j, Side::Left, h);
            worst = worst.max(res / scale);
        }
    }
    Check::new("kernel/p2-right-slice-cr-in-s", worst, 1e-6)
}

pub fn check_cauchy_series_expansion(seed: u64) -> Check {
    let mut rng = c_rng(seed, 13);
    let mut worst = 0.0f64;
    for rho in [0.3, 0.6, 0.9] {
        let s = Quaternion::new(2.0, 0.0, 1.0, 0.0);
        let mut dir = rand_quat(&mut rng, 1.0);
        if dir.norm() < 1e-3 {
            dir = E1;
        }
        let q = dir * (rho * s.norm() / dir.norm());
        for side in [Side::Left, Side::Right] {
            let kind = if side == Side::Left {
                KernelKind::SL
            } else {
                KernelKind::SR
            };
            let closed = kernel_eval(kind, s, q).expect("off sphere");
            let series = cauchy_kernel_series(side, s, q, 1e-10).expect("in disk");
            worst = worst.max((series - closed).norm() / 1e-10);
        }
    }
    Check::new("kernel/cauchy-series-expansion", worst, 1.0)
}

pub fn check_dbar_series_matches_p2(seed: u64) -> Check {
    let mut rng = c_rng(seed, 14);
    let mut worst = 0.0f64;
    for rho in [0.25, 0.5, 0.9] {
        let s = Quaternion::from_real(2.0);
        let mut dir = rand_quat(&mut rng, 1.0);
        dir.x += 0.3;
        let q = dir * (rho * s.norm() / dir.norm());
        for side in [Side::Left, Side::Right] {
            let kind = if side == Side::Left {
                KernelKind::P2L
            } else {
                KernelKind::P2R
            };
            let closed = kernel_eval(kind, s, q).expect("off sphere");
            let series = dbar_kernel_series(side, s, q, 1e-9).expect("in disk");
            worst = worst.max((series - closed).norm());
            let via_appell = appell_kernel_series(side, s, q, 1e-9).expect("in disk");
            worst = worst.max((via_appell - closed).norm());
        }
    }
    Check::new("kernel/dbar-series-matches-p2", worst, 1e-9)
}

pub fn check_series_tail_bound_and_decay(_seed: u64) -> Check {
    // Partial sums must sit inside the analytic tail bound at every
    // truncation, and the observed error must decay geometrically with
    // ratio close to rho.
    let s = Quaternion::from_real(2.0);
    let mut worst_ratio = 0.0f64;
    let mut worst_fit = 0.0f64;
    for (rho, dir) in [(0.25, E1), (0.5, E2 + E1 * 0.5), (0.9, E3)] {
        let q = dir * (rho * s.norm() / dir.norm());
        for side in [Side::Left, Side::Right] {
            let kind = if side == Side::Left {
                KernelKind::P2L
            } else {
                KernelKind::P2R
            };
            let closed = kernel_eval(kind, s, q).expect("off sphere");
            let scale = 1.0 + closed.norm();
            let mut errs: Vec<(usize, f64)> = Vec::new();
            for n in 1..=400usize {
                let partial =
                    crate::kernel::dbar_kernel_series_partial(side, s, q, n).expect("in disk");
                let err = (partial - closed).norm();
                let bound = dbar_series_tail(n, rho, s.norm());
                if err > 1e-12 * scale {
                    worst_ratio = worst_ratio.max(err / bound);
                    errs.push((n, err));
                } else {
                    break;
                }
            }
            if errs.len() >= 4 {
                let (n0, e0) = errs[0];
                let (n1, e1) = errs[errs.len() - 1];
                let fit = (e1 / e0).powf(1.0 / (n1 - n0) as f64);
                worst_fit = worst_fit.max((fit - rho).abs());
            } else {
                worst_fit = f64::INFINITY;
            }
        }
    }
    // Residual folds both requirements: bound ratio <= 1 and |fit - rho|
    // <= 0.1, each normalized by its own tolerance.
    Check::new(
        "kernel/series-tail-bound-and-decay",
        worst_ratio.max(worst_fit / 0.1),
        1.0,
    )
}

// ---------------------------------------------------------------------------
// contour/*
// ---------------------------------------------------------------------------

fn random_left_series<R: Rng>(rng: &mut R, degree: usize) -> SliceFunction {
    let coeffs: Vec<Quaternion> = (0..=degree).map(|_| rand_quat(rng, 0.8)).collect();
    SliceFunction::LeftSeries {
        coeffs,
        radius: None,
    }
}

pub fn check_cauchy_reproduces_values(seed: u64) -> Check {
    let mut rng = c_rng(seed, 15);
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).expect("valid disk");
    let points = [
        ONE + E1,
        Quaternion::new(0.5, 0.0, -1.2, 0.0),
        Quaternion::new(-0.3, 0.4, 0.3, 1.6),
    ];
    let mut worst = 0.0f64;
    for degree in [0, 3, 8] {
        let f = random_left_series(&mut rng, degree);
        for &q in &points {
            let direct = f.eval(q).expect("polynomial");
            let via = cauchy_eval(&f, q, &contour).expect("interior");
            worst = worst.max(rel_err(via, direct));
        }
    }
    // Right series use the mirrored formula.
    let coeffs: Vec<Quaternion> = (0..=4).map(|_| rand_quat(&mut rng, 0.8)).collect();
    let f = SliceFunction::RightSeries {
        coeffs,
        radius: None,
    };
    for &q in &points {
        let direct = f.eval(q).expect("polynomial");
        let via = cauchy_eval(&f, q, &contour).expect("interior");
        worst = worst.max(rel_err(via, direct));
    }
    // Intrinsic stems: powers and the exponential.
    for name in ["pow8", "exp"] {
        let f = SliceFunction::from_name(name).expect("builtin");
        for &q in &points {
            let direct = f.eval(q).expect("entire");
            let via = cauchy_eval(&f, q, &contour).expect("interior");
            worst = worst.max(rel_err(via, direct));
        }
    }
    Check::new("contour/cauchy-reproduces-values", worst, 1e-10)
}

pub fn check_fueter_integral_matches_laplacian(_seed: u64) -> Check {
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).expect("valid disk");
    let points = [E1, ONE + E1, Quaternion::new(0.5, 0.7, -0.3, 0.4)];
    let mut worst = 0.0f64;
    for n in 2..=6u32 {
        let f = SliceFunction::monomial(n as usize);
        let lap = laplacian_monomial(n as i64, LaplacianForm::Direct).expect("n >= 2");
        for &q in &points {
            let via = fueter_integral_eval(&f, q, &contour).expect("interior");
            worst = worst.max(rel_err(via, lap.eval_quat(q)));
        }
    }
    // Degree 0 and 1 are annihilated.
    for n in 0..=1 {
        let f = SliceFunction::monomial(n);
        let via = fueter_integral_eval(&f, ONE + E1, &contour).expect("interior");
        worst = worst.max(via.norm());
    }
    Check::new("contour/fueter-matches-symbolic-laplacian", worst, 1e-8)
}

pub fn check_polyanalytic_integral_matches_dbar(_seed: u64) -> Check {
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).expect("valid disk");
    let points = [E1, ONE + E1, Quaternion::new(-0.2, 0.8, 0.5, 0.1)];
    let mut worst = 0.0f64;
    for n in 1..=6u32 {
        let f = SliceFunction::monomial(n as usize);
        let dbar = dbar_monomial(n as i64).expect("n >= 1");
        for &q in &points {
            let via = polyanalytic_integral_eval(&f, q, &contour).expect("interior");
            worst = worst.max(rel_err(via, dbar.eval_quat(q)));
        }
    }
    let one = SliceFunction::monomial(0);
    worst = worst.max(
        polyanalytic_integral_eval(&one, ONE + E1, &contour)
            .expect("interior")
            .norm(),
    );
    Check::new("contour/polyanalytic-matches-symbolic-dbar", worst, 1e-8)
}

pub fn check_contour_independence(_seed: u64) -> Check {
    let q = ONE + E1;
    let mut contours = Vec::new();
    for radius in [2.5, 3.0, 4.0] {
        for j in [JE1, JE2, mixed_unit()] {
            contours.push(SliceContour::disk(j, 0.0, radius, 256).expect("valid disk"));
        }
    }
    contours.push(SliceContour::annulus(JE1, 0.0, 3.0, 0.4, 256).expect("valid annulus"));
    let mut worst = 0.0f64;
    for name in ["pow2", "exp"] {
        let f = SliceFunction::from_name(name).expect("builtin");
        for eval in [
            cauchy_eval,
            fueter_integral_eval,
            polyanalytic_integral_eval,
        ] {
            let report = contour_independence_check(|c| eval(&f, q, c), &contours, 1e-9)
                .expect("all contours admissible");
            worst = worst.max(report.max_deviation);
        }
    }
    Check::new("contour/independence", worst, 1e-10)
}

pub fn check_contour_node_doubling(_seed: u64) -> Check {
    let q = ONE + E3 * 0.8;
    let mut worst = 0.0f64;
    for name in ["pow8", "exp"] {
        let f = SliceFunction::from_name(name).expect("builtin");
        for eval in [
            cauchy_eval,
            fueter_integral_eval,
            polyanalytic_integral_eval,
        ] {
            let coarse = eval(
                &f,
                q,
                &SliceContour::disk(JE1, 0.0, 3.0, 128).expect("disk"),
            )
            .expect("interior");
            let fine = eval(
                &f,
                q,
                &SliceContour::disk(JE1, 0.0, 3.0, 256).expect("disk"),
            )
            .expect("interior");
            worst = worst.max((coarse - fine).norm() / (1.0 + fine.norm()));
        }
    }
    Check::new("contour/node-doubling", worst, 1e-10)
}

pub fn check_polyanalytic_output_d2(_seed: u64) -> Check {
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).expect("valid disk");
    let f = SliceFunction::from_name("pow3").expect("builtin");
    let g = |q: Quaternion| polyanalytic_integral_eval(&f, q, &contour).expect("interior");
    let samples = [
        Quaternion::new(0.4, 0.8, 0.0, 0.0),
        Quaternion::new(-0.5, 0.0, 1.0, 0.3),
        Quaternion::new(0.2, 0.5, -0.6, 0.4),
    ];
    let report = residual_suite(&g, ResidualKind::Polyanalytic2, &samples);
    Check::new(
        "contour/polyanalytic-output-d2-residual",
        report.max_residual,
        1e-4,
    )
}

// ---------------------------------------------------------------------------
// pde/*
// ---------------------------------------------------------------------------

pub fn check_vekua_system(_seed: u64) -> Check {
    // Extract axial parts of the integral-represented conjugate derivative
    // and check the second-order Vekua-type system on a grid.
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).expect("valid disk");
    let omega = E1;
    let mut worst = 0.0f64;
    for name in ["pow2", "pow3", "exp"] {
        let f = SliceFunction::from_name(name).expect("builtin");
        let value = |q0: f64, r: f64, sign: f64| {
            let q = Quaternion::from_real(q0) + omega * (sign * r);
            polyanalytic_integral_eval(&f, q, &contour).expect("interior")
        };
        let a = |q0: f64, r: f64| (value(q0, r, 1.0) + value(q0, r, -1.0)) * 0.5;
        let b = |q0: f64, r: f64| -(omega * ((value(q0, r, 1.0) - value(q0, r, -1.0)) * 0.5));
        for &q0 in &[-0.5, 0.2, 0.8] {
            for &r in &[0.5, 1.2, 1.9] {
                let (r1, r2) =
                    vekua2_residual(&a, &b, q0, r, FdConfig::default()).expect("positive radius");
                let z = q0.hypot(r);
                let scale = 1.0 + a(q0, r).norm() + b(q0, r).norm() + z;
                worst = worst.max(r1.norm() / scale);
                worst = worst.max(r2.norm() / scale);
            }
        }
    }
    Check::new("pde/vekua-system", worst, 1e-4)
}

pub fn check_monogenic_residuals(seed: u64) -> Check {
    let mut rng = c_rng(seed, 16);
    // The F-kernel is axially monogenic in q.
    let s = Quaternion::new(2.6, 0.0, 0.8, 0.0);
    let samples: Vec<Quaternion> = (0..8)
        .map(|_| {
            let mut q = rand_quat(&mut rng, 0.8);
            q.y += 0.3;
            q
        })
        .collect();
    let fl = |p: Quaternion| kernel_eval(KernelKind::FL, s, p).expect("off sphere");
    let mut worst = residual_suite(&fl, ResidualKind::Monogenic, &samples).max_residual;
    // Fueter-integral outputs are axially monogenic too.
    let contour = SliceContour::disk(JE1, 0.0, 3.0, 256).expect("valid disk");
    let f = SliceFunction::from_name("pow3").expect("builtin");
    let g = |q: Quaternion| fueter_integral_eval(&f, q, &contour).expect("interior");
    let inner: Vec<Quaternion> = samples.iter().map(|q| *q * 0.9).collect();
    worst = worst.max(residual_suite(&g, ResidualKind::Monogenic, &inner).max_residual);
    Check::new("pde/monogenic-residuals", worst, 1e-6)
}

// ---------------------------------------------------------------------------
// opcalc/*
// ---------------------------------------------------------------------------

pub fn check_spectrum_diagonal_lift(_seed: u64) -> Check {
    let points = [
        Quaternion::from_real(2.5),
        ONE + E2 * 2.0,
        Quaternion::new(-0.5, 0.3, 0.0, -0.4),
        E3 * 0.7,
    ];
    let t = CommutingOperator::diagonal_lift(&points);
    let spec = s_spectrum(&t);
    let mut expected: Vec<(f64, f64)> = points.iter().map(|q| q.sphere_params()).collect();
    expected.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let mut worst = 0.0f64;
    if spec.spheres.len() != expected.len() {
        worst = f64::INFINITY;
    } else {
        for (sphere, &(u, v)) in spec.spheres.iter().zip(expected.iter()) {
            worst = worst.max((sphere.u - u).abs().max((sphere.v - v).abs()));
            if sphere.multiplicity != 1 {
                worst = f64::INFINITY;
            }
        }
    }
    Check::new("opcalc/spectrum-diagonal-lift", worst, 1e-10)
}

pub fn check_monomial_consistency(seed: u64) -> Check {
    let mut rng = c_rng(seed, 17);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let dim = 1 + (i % 6);
        let t = CommutingOperator::random_commuting(dim, &mut rng);
        let contour = default_contour(&t, JE1, 256).expect("valid disk");
        for calculus in [Calculus::S, Calculus::F, Calculus::P2] {
            let outs =
                calculus_apply_monomials(calculus, 6, &t, &contour).expect("spectrum enclosed");
            for (n, out) in outs.iter().enumerate() {
                let oracle = match calculus {
                    Calculus::S => s_monomial_oracle(n as u32, &t),
                    Calculus::F => f_monomial_oracle(n as u32, &t),
                    Calculus::P2 => p2_monomial_oracle(n as u32, &t),
                };
                worst = worst.max(rel_err_qm(out, &oracle));
            }
        }
    }
    Check::new("opcalc/monomial-consistency", worst, 1e-8)
}

pub fn check_p2_resolvent_vs_series(seed: u64) -> Check {
    let mut rng = c_rng(seed, 18);
    let mut worst = 0.0f64;
    for i in 0..50 {
        let dim = 1 + (i % 6);
        let base = CommutingOperator::random_commuting(dim, &mut rng);
        let s = [Quaternion::from_real(2.0), ONE + E2, E3 * 2.0][i % 3];
        // Pin |T| / |s| to 0.5 through the certified norm bound.
        let t = base.scaled(0.5 * s.norm() / base.norm_upper_bound().max(1e-12));
        for side in [Side::Left, Side::Right] {
            let kind = if side == Side::Left {
                KernelKind::P2L
            } else {
                KernelKind::P2R
            };
            let closed = resolvent_eval(kind, s, &t).expect("off spectrum");
            let series =
                series_oracle(OperatorSeries::DbarKernelOp, side, s, &t, 1e-10).expect("norm ok");
            worst = worst.max(rel_err_qm(&series, &closed));
        }
    }
    Check::new("opcalc/p2-resolvent-vs-series", worst, 1e-8)
}

pub fn check_appell_operator_series(seed: u64) -> Check {
    let mut rng = c_rng(seed, 19);
    let mut worst = 0.0f64;
    for i in 0..12 {
        let dim = 1 + (i % 4);
        let base = CommutingOperator::random_commuting(dim, &mut rng);
        let s = Quaternion::from_real(2.0);
        let t = base.scaled(0.5 * s.norm() / base.norm_upper_bound().max(1e-12));
        for side in [Side::Left, Side::Right] {
            let kind = if side == Side::Left {
                KernelKind::P2L
            } else {
                KernelKind::P2R
            };
            let closed = resolvent_eval(kind, s, &t).expect("off spectrum");
            let series = appell_operator_series(side, s, &t, 1e-10).expect("norm ok");
            worst = worst.max(rel_err_qm(&series, &closed));
        }
    }
    Check::new("opcalc/appell-operator-series", worst, 1e-8)
}

pub fn check_f_resolvent_series(seed: u64) -> Check {
    let mut rng = c_rng(seed, 20);
    let mut worst = 0.0f64;
    for i in 0..12 {
        let dim = 1 + (i % 4);
        let base = CommutingOperator::random_commuting(dim, &mut rng);
        let s = Quaternion::from_real(3.0);
        let t = base.scaled(0.5 * s.norm() / base.norm_upper_bound().max(1e-12));
        for side in [Side::Left, Side::Right] {
            let kind = if side == Side::Left {
                KernelKind::FL
            } else {
                KernelKind::FR
            };
            let closed = resolvent_eval(kind, s, &t).expect("off spectrum");
            let series = series_oracle(OperatorSeries::FResolventSeries, side, s, &t, 1e-10)
                .expect("norm ok");
            worst = worst.max(rel_err_qm(&series, &closed));
        }
    }
    Check::new("opcalc/f-resolvent-series", worst, 1e-8)
}

pub fn check_well_posedness(seed: u64) -> Check {
    // The calculi must not depend on the imaginary unit or the contour
    // radius.
    let mut rng = c_rng(seed, 21);
    let t = CommutingOperator::random_commuting(3, &mut rng);
    let base_radius = 1.5 * s_spectrum(&t).max_radius() + 0.5;
    let mut contours = Vec::new();
    for factor in [1.0, 2.0] {
        for j in [JE1, JE2, diag_unit()] {
            contours.push(SliceContour::disk(j, 0.0, base_radius * factor, 256).expect("disk"));
        }
    }
    let mut worst = 0.0f64;
    for name in ["pow2", "pow3"] {
        let f = SliceFunction::from_name(name).expect("builtin");
        for calculus in [Calculus::S, Calculus::F, Calculus::P2] {
            let values: Vec<QuaternionMatrix> = contours
                .iter()
                .map(|c| calculus_apply(calculus, &f, &t, c).expect("spectrum enclosed"))
                .collect();
            for i in 0..values.len() {
                for k in i + 1..values.len() {
                    worst = worst.max(rel_err_qm(&values[i], &values[k]));
                }
            }
        }
    }
    Check::new("opcalc/well-posedness", worst, 1e-8)
}

pub fn check_operator_p2_slice_cr(seed: u64) -> Check {
    // s -> P2L(s, T) is right slice hyperholomorphic on the resolvent set.
    let mut rng = c_rng(seed, 22);
    let t = CommutingOperator::random_commuting(2, &mut rng).scaled(0.4);
    let j = JE1;
    let mut worst = 0.0f64;
    for &(u, v) in &[(1.5f64, 0.8), (-1.2, 1.0), (0.3, 2.0)] {
        let h = 1e-5 * (1.0 + u.hypot(v));
        let at = |uu: f64, vv: f64| {
            resolvent_eval(KernelKind::P2L, j.embed(uu, vv), &t).expect("off spectrum")
        };
        let du = at(u + h, v).sub(&at(u - h, v)).scale(1.0 / (2.0 * h));
        let dv = at(u, v + h).sub(&at(u, v - h)).scale(1.0 / (2.0 * h));
        let res = du.add(&dv.mul_quat_right(j.as_quaternion()));
        let scale = 1.0 + at(u, v).frobenius_norm();
        worst = worst.max(res.frobenius_norm() / scale);
    }
    Check::new("opcalc/p2-right-slice-cr-in-s", worst, 1e-6)
}

pub fn check_diagonal_lift_blocks(seed: u64) -> Check {
    // Left form: symbolic oracles for the diagonal blocks of all three
    // calculi applied to monomials.
    let mut rng = c_rng(seed, 23);
    let points = [
        ONE + E1,
        Quaternion::new(0.5, 0.0, 1.0, 0.0),
        rand_quat(&mut rng, 1.0),
    ];
    let t = CommutingOperator::diagonal_lift(&points);
    let contour = default_contour(&t, JE1, 256).expect("valid disk");
    let mut worst = 0.0f64;
    for n in 0..=4usize {
        let f = SliceFunction::monomial(n);
        let s_out = calculus_apply(Calculus::S, &f, &t, &contour).expect("enclosed");
        let f_out = calculus_apply(Calculus::F, &f, &t, &contour).expect("enclosed");
        let p2_out = calculus_apply(Calculus::P2, &f, &t, &contour).expect("enclosed");
        for (i, &q) in points.iter().enumerate() {
            worst = worst.max(rel_err(s_out.diagonal_entry(i), q.powu(n as u32)));
            let f_expect = if n >= 2 {
                laplacian_monomial(n as i64, LaplacianForm::Direct)
                    .expect("n >= 2")
                    .eval_quat(q)
            } else {
                Quaternion::default()
            };
            worst = worst.max(rel_err(f_out.diagonal_entry(i), f_expect));
            let p2_expect = if n >= 1 {
                dbar_monomial(n as i64).expect("n >= 1").eval_quat(q)
            } else {
                Quaternion::default()
            };
            worst = worst.max(rel_err(p2_out.diagonal_entry(i), p2_expect));
        }
    }
    // Right form: f(s) = c s^n has f Dbar = c (Dbar q^n) on diagonal lifts.
    let c = E2;
    let f = SliceFunction::RightSeries {
        coeffs: vec![Quaternion::default(), Quaternion::default(), c],
        radius: None,
    };
    let p2_out = calculus_apply(Calculus::P2, &f, &t, &contour).expect("enclosed");
    for (i, &q) in points.iter().enumerate() {
        let expect = c * dbar_monomial(2).expect("ok").eval_quat(q);
        worst = worst.max(rel_err(p2_out.diagonal_entry(i), expect));
    }
    Check::new("opcalc/diagonal-lift-blocks", worst, 1e-8)
}

// ---------------------------------------------------------------------------
// Runner
// ---------------------------------------------------------------------------

type CheckFn = fn(u64) -> Check;

const ALL_CHECKS: &[(&str, CheckFn)] = &[
    ("quaternion/mul-associativity", check_quat_associativity),
    (
        "quaternion/norm-multiplicative",
        check_quat_norm_multiplicative,
    ),
    (
        "quaternion/conj-anti-automorphism",
        check_quat_conj_anti_automorphism,
    ),
    ("quaternion/slice-roundtrip", check_quat_slice_roundtrip),
    ("quaternion/unit-square", check_quat_unit_square),
    (
        "symbolic/dbar-monomial-closed-form",
        check_dbar_monomial_closed_form,
    ),
    (
        "symbolic/dbar-appell-decomposition",
        check_dbar_appell_decomposition,
    ),
    ("symbolic/laplacian-two-routes", check_laplacian_two_routes),
    ("symbolic/appell-monogenic", check_appell_monogenic),
    ("symbolic/dbar-in-kernel-of-d2", check_dbar_in_kernel_of_d2),
    ("symbolic/axial-roundtrip-and-eval", check_axial_roundtrip),
    (
        "symbolic/right-action-commutation",
        check_right_action_commutation,
    ),
    (
        "finite-diff/matches-symbolic-dbar",
        check_fd_matches_symbolic,
    ),
    ("finite-diff/delta-composition", check_fd_delta_composition),
    ("finite-diff/richardson-order", check_fd_richardson),
    (
        "stem/representation-consistency",
        check_stem_representation_consistency,
    ),
    ("stem/cauchy-riemann-residual", check_stem_cauchy_riemann),
    ("stem/powers-match-quaternion-powers", check_stem_powers),
    (
        "kernel/fl-commutation-identity",
        check_fl_commutation_identity,
    ),
    (
        "kernel/p2-is-fd-dbar-of-cauchy-kernel",
        check_p2_is_fd_dbar_of_cauchy_kernel,
    ),
    ("kernel/p2-d2-residual", check_p2_d2_residual),
    (
        "kernel/p2-right-slice-cr-in-s",
        check_p2_right_slice_cr_in_s,
    ),
    (
        "kernel/cauchy-series-expansion",
        check_cauchy_series_expansion,
    ),
    (
        "kernel/dbar-series-matches-p2",
        check_dbar_series_matches_p2,
    ),
    (
        "kernel/series-tail-bound-and-decay",
        check_series_tail_bound_and_decay,
    ),
    (
        "contour/cauchy-reproduces-values",
        check_cauchy_reproduces_values,
    ),
    (
        "contour/fueter-matches-symbolic-laplacian",
        check_fueter_integral_matches_laplacian,
    ),
    (
        "contour/polyanalytic-matches-symbolic-dbar",
        check_polyanalytic_integral_matches_dbar,
    ),
    ("contour/independence", check_contour_independence),
    ("contour/node-doubling", check_contour_node_doubling),
    (
        "contour/polyanalytic-output-d2-residual",
        check_polyanalytic_output_d2,
    ),
    ("pde/vekua-system", check_vekua_system),
    ("pde/monogenic-residuals", check_monogenic_residuals),
    (
        "opcalc/spectrum-diagonal-lift",
        check_spectrum_diagonal_lift,
    ),
    ("opcalc/monomial-consistency", check_monomial_consistency),
    (
        "opcalc/p2-resolvent-vs-series",
        check_p2_resolvent_vs_series,
    ),
    (
        "opcalc/appell-operator-series",
        check_appell_operator_series,
    ),
    ("opcalc/f-resolvent-series", check_f_resolvent_series),
    ("opcalc/well-posedness", check_well_posedness),
    ("opcalc/p2-right-slice-cr-in-s", check_operator_p2_slice_cr),
    ("opcalc/diagonal-lift-blocks", check_diagonal_lift_blocks),
];

/// Run every check in the suite with the given seed; results are sorted by
/// check name so output ordering is canonical.
pub fn run_suite(suite: Suite, seed: u64) -> Vec<Check> {
    let mut results: Vec<Check> = ALL_CHECKS
        .iter()
        .filter(|(name, _)| suite.contains(name))
        .map(|(_, f)| f(seed))
        .collect();
    results.sort_by(|a, b| a.check.cmp(b.check));
    results
}
