//! Slice Cauchy domains and the contour integral formulas.
//!
//! Supported domains are disks and annuli centered on the real axis; their
//! slice boundaries are circles in a chosen plane `C_J`. On a ccw circle
//! `s(t) = c + R e^(Jt)` the measure convention `ds_J = ds (-J)` gives
//! `ds_J = R e^(Jt) dt`, so `(1/2pi) \oint s^-1 ds_J = 1`. Integration uses
//! the periodic trapezoidal rule, spectrally accurate for the analytic
//! integrands that arise here, with a deterministic summation order.

use crate::error::{Error, Result};
use crate::kernel::{kernel_eval, KernelKind};
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::slice_function::SliceFunction;
use crate::Side;

/// Default node count per circle; `FUETERKIT_NODES` overrides it in the CLI.
pub const DEFAULT_NODES: usize = 256;

/// Default safety margin for boundary proximity checks.
pub const DEFAULT_MARGIN: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

/// A circle centered on the real axis in the slice plane.
#[derive(Clone, Copy, Debug)]
pub struct Circle {
    pub center: f64,
    pub radius: f64,
    pub orientation: Orientation,
}

/// Boundary of a slice Cauchy domain in the plane `C_J`, with quadrature
/// node counts. Outer boundaries run ccw, inner (annulus) boundaries cw.
#[derive(Clone, Debug)]
pub struct SliceContour {
    pub j: ImaginaryUnit,
    pub circles: Vec<Circle>,
    pub nodes: usize,
    pub margin: f64,
}

impl SliceContour {
    /// Disk of the given radius about a real center.
    pub fn disk(j: ImaginaryUnit, center: f64, radius: f64, nodes: usize) -> Result<Self> {
        if radius <= 0.0 || nodes < 2 {
            return Err(Error::InvalidInput(
                "disk needs radius > 0 and at least 2 nodes".into(),
            ));
        }
        Ok(Self {
            j,
            circles: vec![Circle {
                center,
                radius,
                orientation: Orientation::Ccw,
            }],
            nodes,
            margin: DEFAULT_MARGIN,
        })
    }

    /// Annulus `r_inner < |z - center| < r_outer` about a real center.
    pub fn annulus(
        j: ImaginaryUnit,
        center: f64,
        r_outer: f64,
        r_inner: f64,
        nodes: usize,
    ) -> Result<Self> {
        if !(0.0 < r_inner && r_inner < r_outer) || nodes < 2 {
            return Err(Error::InvalidInput(
                "annulus needs 0 < r_inner < r_outer".into(),
            ));
        }
        Ok(Self {
            j,
            circles: vec![
                Circle {
                    center,
                    radius: r_outer,
                    orientation: Orientation::Ccw,
                },
                Circle {
                    center,
                    radius: r_inner,
                    orientation: Orientation::Cw,
                },
            ],
            nodes,
            margin: DEFAULT_MARGIN,
        })
    }

    pub fn with_margin(mut self, margin: f64) -> Self {
        self.margin = margin;
        self
    }

    /// Winding number of the boundary around the slice-plane point `(u, v)`,
    /// and the distance from the point to the nearest circle.
    pub fn locate(&self, u: f64, v: f64) -> (i32, f64) {
        let mut winding = 0;
        let mut dist = f64::INFINITY;
        for c in &self.circles {
            let d = ((u - c.center).hypot(v) - c.radius).abs();
            dist = dist.min(d);
            if (u - c.center).hypot(v) < c.radius {
                winding += match c.orientation {
                    Orientation::Ccw => 1,
                    Orientation::Cw => -1,
                };
            }
        }
        (winding, dist)
    }

    /// Check that the sphere `(u, v)` is strictly inside the domain and
    /// clear of the boundary. Circles are centered on the real axis, so the
    /// two slice traces `u +- Jv` are interior or exterior together.
    fn require_enclosed(&self, u: f64, v: f64, outside: Error) -> Result<()> {
        let (winding, dist) = self.locate(u, v);
        if dist < self.margin {
            return Err(if v == 0.0 {
                Error::PointOnBoundary
            } else {
                Error::SphereHitsBoundary
            });
        }
        if winding != 1 {
            return Err(outside);
        }
        Ok(())
    }

    pub fn require_point_enclosed(&self, q: Quaternion) -> Result<()> {
        let (u, v) = q.sphere_params();
        self.require_enclosed(u, v, Error::OutsideDomain)
    }

    pub fn require_sphere_enclosed(&self, u: f64, v: f64) -> Result<()> {
        self.require_enclosed(u, v, Error::SpectrumNotEnclosed)
    }

    /// Trapezoidal quadrature of `(1/2pi) \oint term(s) ds_J`. The closure
    /// receives each node `s` and the weight `w` (the discretized `ds_J/2pi`,
    /// a quaternion in `C_J`) and must place `w` itself so that left/right
    /// factor order is explicit. Nodes are summed in a fixed order, so
    /// repeated runs are bit-identical.
    pub fn integrate<F>(&self, mut term: F) -> Result<Quaternion>
    where
        F: FnMut(Quaternion, Quaternion) -> Result<Quaternion>,
    {
        let jq = self.j.as_quaternion();
        let mut acc = Quaternion::default();
        for c in &self.circles {
            let sign = match c.orientation {
                Orientation::Ccw => 1.0,
                Orientation::Cw => -1.0,
            };
            let dt = 2.0 * std::f64::consts::PI / self.nodes as f64;
            for k in 0..self.nodes {
                let t = sign * (k as f64) * dt;
                let (sin_t, cos_t) = t.sin_cos();
                let s =
                    Quaternion::from_real(c.center + c.radius * cos_t) + jq * (c.radius * sin_t);
                // ds_J = sigma R e^(sigma J t) dt on this parametrization.
                let w = (Quaternion::from_real(cos_t) + jq * sin_t)
                    * (sign * c.radius / self.nodes as f64);
                acc += term(s, w)?;
            }
        }
        Ok(acc)
    }
}

/// Slice Cauchy formula: reproduces `f(q)` from boundary values,
/// `(1/2pi) \oint SL(s,q) ds_J f(s)` for left slice functions and the
/// mirrored form for right ones.
pub fn cauchy_eval(f: &SliceFunction, q: Quaternion, contour: &SliceContour) -> Result<Quaternion> {
    eval_with_kernel(f, q, contour, KernelKind::SL, KernelKind::SR)
}

/// Integral form of the two-step monogenic construction: evaluates the
/// Laplacian of `f` at `q` as `(1/2pi) \oint FL(s,q) ds_J f(s)` (resp. the
/// mirrored right form). The output is axially monogenic.
pub fn fueter_integral_eval(
    f: &SliceFunction,
    q: Quaternion,
    contour: &SliceContour,
) -> Result<Quaternion> {
    eval_with_kernel(f, q, contour, KernelKind::FL, KernelKind::FR)
}

/// Integral representation of the order-2 axially polyanalytic function
/// induced by `f`: evaluates the conjugate Fueter derivative of `f` at `q`
/// as `(1/2pi) \oint P2L(s,q) ds_J f(s)` (resp. mirrored), which expands to
/// `-(1/2pi) sum_{k=0,1} (-q0)^k \oint FL(s,q) s^(1-k) ds_J f(s)`.
pub fn polyanalytic_integral_eval(
    f: &SliceFunction,
    q: Quaternion,
    contour: &SliceContour,
) -> Result<Quaternion> {
    eval_with_kernel(f, q, contour, KernelKind::P2L, KernelKind::P2R)
}

fn eval_with_kernel(
    f: &SliceFunction,
    q: Quaternion,
    contour: &SliceContour,
    left: KernelKind,
    right: KernelKind,
) -> Result<Quaternion> {
    contour.require_point_enclosed(q)?;
    match f.side() {
        Side::Left => contour.integrate(|s, w| {
            let k = kernel_eval(left, s, q)?;
            Ok(k * w * f.eval(s)?)
        }),
        Side::Right => contour.integrate(|s, w| {
            let k = kernel_eval(right, s, q)?;
            Ok(f.eval(s)? * w * k)
        }),
    }
}

/// Outcome of re-evaluating one integral over several admissible contours.
#[derive(Clone, Debug)]
pub struct IndependenceReport {
    pub values: Vec<Quaternion>,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl IndependenceReport {
    pub fn pass(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

/// Evaluate the same functional on every contour and report the maximum
/// pairwise deviation; the integral formulas must not depend on the domain
/// or on the imaginary unit.
pub fn contour_independence_check<F>(
    evaluator: F,
    contours: &[SliceContour],
    tolerance: f64,
) -> Result<IndependenceReport>
where
    F: Fn(&SliceContour) -> Result<Quaternion>,
{
    let mut values = Vec::with_capacity(contours.len());
    for c in contours {
        values.push(evaluator(c)?);
    }
    let mut max_deviation = 0.0f64;
    for i in 0..values.len() {
        for k in i + 1..values.len() {
            max_deviation = max_deviation.max((values[i] - values[k]).norm());
        }
    }
    Ok(IndependenceReport {
        values,
        max_deviation,
        tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{E1, E2, E3, JE1, JE2, ONE};
    use crate::symbolic::{dbar_monomial, laplacian_monomial, LaplacianForm};

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn residue_normalization() {
        let c = SliceContour::disk(JE1, 0.0, 1.0, 128).unwrap();
        // (1/2pi) \oint s^-1 ds_J = 1
        let v = c.integrate(|s, w| Ok(s.inv()? * w)).unwrap();
        assert!(close(v, ONE, 1e-13));
        // s^-2 integrates to zero.
        let v = c.integrate(|s, w| Ok(s.inv()?.powu(2) * w)).unwrap();
        assert!(v.norm() <= 1e-13);
        // Fourier orthogonality: s^n s^(-1-m) -> delta_{n,m}.
        for n in 0..4u32 {
            for m in 0..4i32 {
                let v = c
                    .integrate(|s, w| Ok(s.powu(n) * s.powi(-1 - m)? * w))
                    .unwrap();
                let expect = if n as i32 == m { 1.0 } else { 0.0 };
                assert!(
                    close(v, Quaternion::from_real(expect), 1e-12),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn cw_circle_flips_the_sign() {
        let mut c = SliceContour::disk(JE1, 0.0, 1.0, 128).unwrap();
        c.circles[0].orientation = Orientation::Cw;
        let v = c.integrate(|s, w| Ok(s.inv()? * w)).unwrap();
        assert!(close(v, -ONE, 1e-13));
    }

    #[test]
    fn cauchy_reproduces_polynomials_and_exp() {
        let q = ONE + E1;
        let c = SliceContour::disk(JE1, 0.0, 3.0, 256).unwrap();
        let f = SliceFunction::from_name("pow2").unwrap();
        assert!(close(cauchy_eval(&f, q, &c).unwrap(), 2.0 * E1, 1e-11));
        let one = SliceFunction::LeftSeries {
            coeffs: vec![ONE],
            radius: None,
        };
        assert!(close(cauchy_eval(&one, q, &c).unwrap(), ONE, 1e-12));
        let f = SliceFunction::from_name("exp").unwrap();
        let expect = Quaternion::from_real(1f64.cos()) + E1 * 1f64.sin();
        assert!(close(cauchy_eval(&f, E1, &c).unwrap(), expect, 1e-12));
    }

    #[test]
    fn cauchy_handles_right_series() {
        // f(q) = e2 q is right slice hyperholomorphic.
        let f = SliceFunction::RightSeries {
            coeffs: vec![Quaternion::default(), E2],
            radius: None,
        };
        let c = SliceContour::disk(JE2, 0.0, 3.0, 256).unwrap();
        let q = ONE + E1 * 0.5;
        assert!(close(cauchy_eval(&f, q, &c).unwrap(), E2 * q, 1e-11));
    }

    #[test]
    fn fueter_integral_matches_symbolic_laplacian() {
        let c = SliceContour::disk(JE1, 0.0, 3.0, 256).unwrap();
        // f = q^3 at q = e1: Delta q^3 = -8q - 4qbar -> -4 e1.
        let f = SliceFunction::from_name("pow3").unwrap();
        assert!(close(
            fueter_integral_eval(&f, E1, &c).unwrap(),
            E1 * -4.0,
            1e-10
        ));
        // f = q^2 at 1 + e1: Delta q^2 = -4.
        let f = SliceFunction::from_name("pow2").unwrap();
        let v = fueter_integral_eval(&f, ONE + E1, &c).unwrap();
        assert!(close(v, Quaternion::from_real(-4.0), 1e-10));
        // Constants are annihilated.
        let one = SliceFunction::LeftSeries {
            coeffs: vec![ONE],
            radius: None,
        };
        assert!(fueter_integral_eval(&one, ONE + E1, &c).unwrap().norm() <= 1e-11);
        // Spot-check against the symbolic closed form at a generic point.
        let q = Quaternion::new(0.5, 0.7, -0.3, 0.4);
        let lap = laplacian_monomial(3, LaplacianForm::Direct).unwrap();
        let f = SliceFunction::from_name("pow3").unwrap();
        assert!(close(
            fueter_integral_eval(&f, q, &c).unwrap(),
            lap.eval_quat(q),
            1e-10
        ));
    }

    #[test]
    fn polyanalytic_integral_matches_symbolic_dbar() {
        let c = SliceContour::disk(JE1, 0.0, 3.0, 256).unwrap();
        // f = q: Dbar q = 4 everywhere.
        let f = SliceFunction::from_name("pow1").unwrap();
        let v = polyanalytic_integral_eval(&f, Quaternion::new(0.4, 0.3, 0.1, -0.2), &c).unwrap();
        assert!(close(v, Quaternion::from_real(4.0), 1e-10));
        // f = q^2 at 1 + e1: Dbar q^2 = 6q + 2qbar -> 8 + 4 e1.
        let f = SliceFunction::from_name("pow2").unwrap();
        let v = polyanalytic_integral_eval(&f, ONE + E1, &c).unwrap();
        assert!(close(v, Quaternion::new(8.0, 4.0, 0.0, 0.0), 1e-10));
        // Constants are annihilated.
        let one = SliceFunction::LeftSeries {
            coeffs: vec![ONE],
            radius: None,
        };
        assert!(
            polyanalytic_integral_eval(&one, ONE + E1, &c)
                .unwrap()
                .norm()
                <= 1e-11
        );
        // Generic point against the exact polynomial.
        let q = Quaternion::new(-0.2, 0.8, 0.5, 0.1);
        let dbar3 = dbar_monomial(3).unwrap();
        let f = SliceFunction::from_name("pow3").unwrap();
        assert!(close(
            polyanalytic_integral_eval(&f, q, &c).unwrap(),
            dbar3.eval_quat(q),
            1e-10
        ));
    }

    #[test]
    fn right_sided_integral_formulas() {
        // For the right slice function f(s) = c s^2 the mirrored formulas
        // give c (Dbar q^2) and c (Delta q^2); the constant passes through
        // on the left by the commutation of the right action on monomials.
        let c = SliceContour::disk(JE2, 0.0, 3.0, 256).unwrap();
        let coeff = Quaternion::new(0.5, -1.0, 0.25, 2.0);
        let f = SliceFunction::RightSeries {
            coeffs: vec![Quaternion::default(), Quaternion::default(), coeff],
            radius: None,
        };
        let q = Quaternion::new(0.6, -0.4, 0.8, 0.3);
        let dbar2 = dbar_monomial(2).unwrap();
        assert!(close(
            polyanalytic_integral_eval(&f, q, &c).unwrap(),
            coeff * dbar2.eval_quat(q),
            1e-10
        ));
        assert!(close(
            fueter_integral_eval(&f, q, &c).unwrap(),
            coeff * Quaternion::from_real(-4.0),
            1e-10
        ));
    }

    #[test]
    fn geometry_validation() {
        let c = SliceContour::disk(JE1, 0.0, 2.0, 64)
            .unwrap()
            .with_margin(0.05);
        let f = SliceFunction::from_name("pow2").unwrap();
        // Outside the disk.
        assert_eq!(
            cauchy_eval(&f, Quaternion::from_real(3.0), &c).unwrap_err(),
            Error::OutsideDomain
        );
        // Real point within the margin of the boundary.
        assert_eq!(
            cauchy_eval(&f, Quaternion::from_real(1.99), &c).unwrap_err(),
            Error::PointOnBoundary
        );
        // Non-real sphere grazing the boundary.
        let q = Quaternion::new(1.4, 1.4283, 0.0, 0.0);
        assert_eq!(
            cauchy_eval(&f, q, &c).unwrap_err(),
            Error::SphereHitsBoundary
        );
        // Annulus excludes the hole.
        let a = SliceContour::annulus(JE1, 0.0, 3.0, 1.0, 64).unwrap();
        assert_eq!(
            cauchy_eval(&f, Quaternion::from_real(0.5), &a).unwrap_err(),
            Error::OutsideDomain
        );
    }

    #[test]
    fn independence_across_radii_units_and_annulus() {
        let f = SliceFunction::from_name("pow2").unwrap();
        let q = ONE + E1;
        let j_mixed = ImaginaryUnit::from_components(1.0, 0.0, 1.0).unwrap();
        let mut contours = Vec::new();
        for radius in [2.5, 3.0, 4.0] {
            for j in [JE1, JE2, j_mixed] {
                contours.push(SliceContour::disk(j, 0.0, radius, 256).unwrap());
            }
        }
        contours.push(SliceContour::annulus(JE1, 0.0, 3.0, 0.4, 256).unwrap());
        let report =
            contour_independence_check(|c| polyanalytic_integral_eval(&f, q, c), &contours, 1e-9)
                .unwrap();
        assert!(report.pass(), "max deviation {}", report.max_deviation);
        // The common value is the conjugate Fueter derivative, 8 + 4 e1.
        assert!(close(
            report.values[0],
            Quaternion::new(8.0, 4.0, 0.0, 0.0),
            1e-10
        ));
        // Constants reproduce identically everywhere.
        let one = SliceFunction::LeftSeries {
            coeffs: vec![ONE],
            radius: None,
        };
        let report =
            contour_independence_check(|c| cauchy_eval(&one, q, c), &contours, 1e-14).unwrap();
        assert!(report.pass(), "constant deviation {}", report.max_deviation);
    }

    #[test]
    fn node_doubling_is_converged() {
        let f = SliceFunction::from_name("pow8").unwrap();
        let q = ONE + E3 * 0.8;
        let v128 = cauchy_eval(&f, q, &SliceContour::disk(JE1, 0.0, 3.0, 128).unwrap()).unwrap();
        let v256 = cauchy_eval(&f, q, &SliceContour::disk(JE1, 0.0, 3.0, 256).unwrap()).unwrap();
        assert!((v128 - v256).norm() <= 1e-10 * (1.0 + v256.norm()));
    }
}
