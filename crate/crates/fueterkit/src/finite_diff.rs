//! Central finite-difference realizations of the Fueter operators on
//! black-box functions `H -> H`, plus the PDE residual checks used to
//! validate kernel and contour outputs: monogenicity (`D f = 0`), order-2
//! polyanalyticity (`D^2 f = 0`), harmonicity (`Delta f = 0`), the
//! second-order Vekua-type system on axial parts, and the slice
//! Cauchy-Riemann residual in the kernel variable.

use crate::error::{Error, Result};
use crate::quaternion::{ImaginaryUnit, Quaternion, E1, E2, E3, ONE};
use crate::Side;

/// Step sizes for the central-difference stencils: `h1` for first
/// derivatives, `h2` for second derivatives and nested stencils.
#[derive(Clone, Copy, Debug)]
pub struct FdConfig {
    pub h1: f64,
    pub h2: f64,
}

impl FdConfig {
    /// Default steps scaled to the evaluation point: `h1 = 1e-5 * scale`,
    /// `h2 = 1e-3 * scale` with `scale = 1 + |q|`.
    pub fn scaled_to(q: Quaternion) -> Self {
        let scale = 1.0 + q.norm();
        Self {
            h1: 1e-5 * scale,
            h2: 1e-3 * scale,
        }
    }
}

impl Default for FdConfig {
    fn default() -> Self {
        Self { h1: 1e-5, h2: 1e-3 }
    }
}

/// Operator selector for [`fd_apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FdOperator {
    D,
    Dbar,
    Delta,
    D2,
}

const AXES: [Quaternion; 4] = [ONE, E1, E2, E3];

fn partial<F: Fn(Quaternion) -> Quaternion>(
    f: &F,
    q: Quaternion,
    unit: Quaternion,
    h: f64,
) -> Quaternion {
    (f(q + unit * h) - f(q - unit * h)) / (2.0 * h)
}

fn first_order<F: Fn(Quaternion) -> Quaternion>(
    f: &F,
    q: Quaternion,
    h: f64,
    conjugate: bool,
    right_units: bool,
) -> Quaternion {
    let mut acc = partial(f, q, ONE, h);
    let sign = if conjugate { -1.0 } else { 1.0 };
    for &unit in &AXES[1..] {
        let d = partial(f, q, unit, h);
        let term = if right_units { d * unit } else { unit * d };
        acc += term * sign;
    }
    acc
}

/// Central-difference `D`, `Dbar`, `Delta`, or `D^2` at `q`; the imaginary
/// units multiply the partials on the left. `D^2` nests two first-order `D`
/// stencils at step `h2`.
pub fn fd_apply<F: Fn(Quaternion) -> Quaternion>(
    op: FdOperator,
    f: &F,
    q: Quaternion,
    cfg: FdConfig,
) -> Quaternion {
    match op {
        FdOperator::D => first_order(f, q, cfg.h1, false, false),
        FdOperator::Dbar => first_order(f, q, cfg.h1, true, false),
        FdOperator::Delta => {
            let h = cfg.h2;
            let mut acc = Quaternion::default();
            let center = f(q);
            for &unit in &AXES {
                acc += (f(q + unit * h) - center * 2.0 + f(q - unit * h)) / (h * h);
            }
            acc
        }
        FdOperator::D2 => {
            let inner = |p: Quaternion| first_order(f, p, cfg.h2, false, false);
            first_order(&inner, q, cfg.h2, false, false)
        }
    }
}

/// Right action `f op`: as [`fd_apply`] but with the imaginary units
/// multiplying the partials on the right.
pub fn fd_apply_right<F: Fn(Quaternion) -> Quaternion>(
    op: FdOperator,
    f: &F,
    q: Quaternion,
    cfg: FdConfig,
) -> Quaternion {
    match op {
        FdOperator::D => first_order(f, q, cfg.h1, false, true),
        FdOperator::Dbar => first_order(f, q, cfg.h1, true, true),
        FdOperator::Delta => fd_apply(FdOperator::Delta, f, q, cfg),
        FdOperator::D2 => {
            let inner = |p: Quaternion| first_order(f, p, cfg.h2, false, true);
            first_order(&inner, q, cfg.h2, false, true)
        }
    }
}

/// Residuals of the two equations of the second-order Vekua-type system for
/// axial parts `A(q0, r)`, `B(q0, r)` of an order-2 polyanalytic function:
///
/// ```text
/// d2A/dq0^2 - 2 d2B/dq0dr - (4/r) dB/dq0 - d2A/dr^2 - (2/r) dA/dr
/// d2B/dq0^2 + 2 d2A/dq0dr - d2B/dr^2 - 2 (r dB/dr - B)/r^2
/// ```
pub fn vekua2_residual<FA, FB>(
    a: &FA,
    b: &FB,
    q0: f64,
    r: f64,
    cfg: FdConfig,
) -> Result<(Quaternion, Quaternion)>
where
    FA: Fn(f64, f64) -> Quaternion,
    FB: Fn(f64, f64) -> Quaternion,
{
    if r <= 0.0 {
        return Err(Error::NonPositiveRadius(r));
    }
    let h1 = cfg.h1;
    let h2 = cfg.h2;

    let d_q0 = |g: &dyn Fn(f64, f64) -> Quaternion| (g(q0 + h1, r) - g(q0 - h1, r)) / (2.0 * h1);
    let d_r = |g: &dyn Fn(f64, f64) -> Quaternion| (g(q0, r + h1) - g(q0, r - h1)) / (2.0 * h1);
    let d2_q0 = |g: &dyn Fn(f64, f64) -> Quaternion| {
        (g(q0 + h2, r) - g(q0, r) * 2.0 + g(q0 - h2, r)) / (h2 * h2)
    };
    let d2_r = |g: &dyn Fn(f64, f64) -> Quaternion| {
        (g(q0, r + h2) - g(q0, r) * 2.0 + g(q0, r - h2)) / (h2 * h2)
    };
    let d2_mixed = |g: &dyn Fn(f64, f64) -> Quaternion| {
        (g(q0 + h2, r + h2) - g(q0 + h2, r - h2) - g(q0 - h2, r + h2) + g(q0 - h2, r - h2))
            / (4.0 * h2 * h2)
    };

    let res1 = d2_q0(a) - d2_mixed(b) * 2.0 - d_q0(b) * (4.0 / r) - d2_r(a) - d_r(a) * (2.0 / r);
    let res2 = d2_q0(b) + d2_mixed(a) * 2.0 - d2_r(b) - (d_r(b) * r - b(q0, r)) * (2.0 / (r * r));
    Ok((res1, res2))
}

/// Which PDE a [`residual_suite`] run checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualKind {
    Monogenic,
    Polyanalytic2,
    Harmonic,
}

/// Maximum scaled residual over a sample set.
#[derive(Clone, Debug)]
pub struct ResidualReport {
    pub kind: ResidualKind,
    pub max_residual: f64,
    pub worst_sample: Option<Quaternion>,
}

/// Evaluate `|D f|`, `|D^2 f|`, or `|Delta f|` over the samples, each
/// normalized by the local scale `1 + |f(q)| + |q|`.
pub fn residual_suite<F: Fn(Quaternion) -> Quaternion>(
    f: &F,
    kind: ResidualKind,
    samples: &[Quaternion],
) -> ResidualReport {
    let op = match kind {
        ResidualKind::Monogenic => FdOperator::D,
        ResidualKind::Polyanalytic2 => FdOperator::D2,
        ResidualKind::Harmonic => FdOperator::Delta,
    };
    let mut max_residual = 0.0f64;
    let mut worst = None;
    for &q in samples {
        let cfg = FdConfig::scaled_to(q);
        let r = fd_apply(op, f, q, cfg).norm();
        let scale = 1.0 + f(q).norm() + q.norm();
        let scaled = r / scale;
        if scaled > max_residual {
            max_residual = scaled;
            worst = Some(q);
        }
    }
    ResidualReport {
        kind,
        max_residual,
        worst_sample: worst,
    }
}

/// Slice Cauchy-Riemann residual of `s -> f(s)` on the plane `C_J` at
/// `s = u + J v`: `|d_u F + J d_v F|` for the left system, `|d_u F + (d_v F) J|`
/// for the right one.
pub fn slice_cr_residual<F: Fn(Quaternion) -> Quaternion>(
    f: &F,
    u: f64,
    v: f64,
    j: ImaginaryUnit,
    side: Side,
    h: f64,
) -> f64 {
    let at = |uu: f64, vv: f64| f(j.embed(uu, vv));
    let du = (at(u + h, v) - at(u - h, v)) / (2.0 * h);
    let dv = (at(u, v + h) - at(u, v - h)) / (2.0 * h);
    let jq = j.as_quaternion();
    match side {
        Side::Left => (du + jq * dv).norm(),
        Side::Right => (du + dv * jq).norm(),
    }
}
