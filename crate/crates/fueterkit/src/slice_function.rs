//! Slice hyperholomorphic functions: holomorphic stems lifted by the slice
//! operator, and left/right power series with quaternion coefficients.
//!
//! A stem `f0 = alpha + i beta` induces the intrinsic slice function
//! `f(q) = alpha(q0, |Im q|) + (Im q / |Im q|) beta(q0, |Im q|)`; stems are
//! supplied on the closed upper half-plane and extended by reflection
//! (`alpha` even, `beta` odd in `v`).

use std::fmt;
use std::sync::Arc;

use num::complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, ONE};
use crate::Side;

/// Absolute tolerance for the `beta(u, 0) = 0` check at real points.
pub const TOL_REAL: f64 = 1e-10;

type StemEval = dyn Fn(Complex64) -> Option<Complex64> + Send + Sync;

/// A holomorphic complex function given as a black-box evaluator on the
/// upper half-plane; `None` marks points outside its domain (e.g. poles).
#[derive(Clone)]
pub struct StemFunction {
    name: String,
    eval: Arc<StemEval>,
}

impl StemFunction {
    pub fn new(
        name: impl Into<String>,
        eval: impl Fn(Complex64) -> Option<Complex64> + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `(alpha, beta)` at `(u, v)`, reflecting across the real axis for
    /// `v < 0` so the even/odd stem conditions hold by construction.
    pub fn eval_ab(&self, u: f64, v: f64) -> Result<(f64, f64)> {
        let z = Complex64::new(u, v.abs());
        let w = (self.eval)(z).ok_or(Error::OutsideDomain)?;
        if v < 0.0 {
            Ok((w.re, -w.im))
        } else {
            Ok((w.re, w.im))
        }
    }
}

impl fmt::Debug for StemFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StemFunction")
            .field("name", &self.name)
            .finish()
    }
}

/// A slice hyperholomorphic function in one of three shapes: an intrinsic
/// stem lift, or a polynomial-type series with quaternion coefficients on
/// the right (left slice) or on the left (right slice).
#[derive(Clone, Debug)]
pub enum SliceFunction {
    Intrinsic(StemFunction),
    /// `f(q) = sum q^n a_n`
    LeftSeries {
        coeffs: Vec<Quaternion>,
        radius: Option<f64>,
    },
    /// `f(q) = sum a_n q^n`
    RightSeries {
        coeffs: Vec<Quaternion>,
        radius: Option<f64>,
    },
}

/// The slice operator: lift a holomorphic stem to the intrinsic slice
/// hyperholomorphic function it induces.
pub fn tf_extend(stem: StemFunction) -> SliceFunction {
    SliceFunction::Intrinsic(stem)
}

impl SliceFunction {
    /// Chirality used to order kernel factors; intrinsic functions are both
    /// left and right slice hyperholomorphic and default to the left form.
    pub fn side(&self) -> Side {
        match self {
            SliceFunction::Intrinsic(_) | SliceFunction::LeftSeries { .. } => Side::Left,
            SliceFunction::RightSeries { .. } => Side::Right,
        }
    }

    pub fn is_intrinsic(&self) -> bool {
        matches!(self, SliceFunction::Intrinsic(_))
    }

    /// Evaluate at a quaternion point.
    pub fn eval(&self, q: Quaternion) -> Result<Quaternion> {
        match self {
            SliceFunction::Intrinsic(stem) => {
                let sp = q.slice_decompose();
                let (alpha, beta) = stem.eval_ab(sp.u, sp.v)?;
                match sp.j {
                    Some(j) => Ok(Quaternion::from_real(alpha) + j.as_quaternion() * beta),
                    None => {
                        if beta.abs() > TOL_REAL {
                            Err(Error::StemNotReal { beta })
                        } else {
                            Ok(Quaternion::from_real(alpha))
                        }
                    }
                }
            }
            SliceFunction::LeftSeries { coeffs, radius } => {
                check_radius(q, *radius)?;
                // Horner from the top: a_0 + q (a_1 + q (a_2 + ...))
                let mut acc = Quaternion::default();
                for a in coeffs.iter().rev() {
                    acc = q * acc + *a;
                }
                Ok(acc)
            }
            SliceFunction::RightSeries { coeffs, radius } => {
                check_radius(q, *radius)?;
                let mut acc = Quaternion::default();
                for a in coeffs.iter().rev() {
                    acc = acc * q + *a;
                }
                Ok(acc)
            }
        }
    }

    /// Built-in stems addressable by name: `powN`, `exp`, and
    /// `rational:n0,n1,../d0,d1,..` with real coefficients in ascending
    /// degree order.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        if name == "exp" {
            return Ok(tf_extend(StemFunction::new("exp", |z| Some(z.exp()))));
        }
        if let Some(deg) = name.strip_prefix("pow") {
            let n: u32 = deg
                .trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad power in '{name}'")))?;
            return Ok(tf_extend(StemFunction::new(format!("pow{n}"), move |z| {
                Some(z.powu(n))
            })));
        }
        if let Some(spec) = name.strip_prefix("rational:") {
            let (num, den) = spec.split_once('/').ok_or_else(|| {
                Error::InvalidInput("rational needs 'num/den' coefficient lists".into())
            })?;
            let parse_list = |s: &str| -> Result<Vec<f64>> {
                s.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<f64>()
                            .map_err(|_| Error::InvalidInput(format!("bad coefficient '{t}'")))
                    })
                    .collect()
            };
            let p = parse_list(num)?;
            let q = parse_list(den)?;
            if q.iter().all(|c| *c == 0.0) {
                return Err(Error::InvalidInput(
                    "rational denominator is identically zero".into(),
                ));
            }
            return Ok(tf_extend(StemFunction::new(name, move |z| {
                let horner = |cs: &[f64]| {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for c in cs.iter().rev() {
                        acc = acc * z + c;
                    }
                    acc
                };
                let denom = horner(&q);
                if denom.norm() < 1e-12 {
                    None
                } else {
                    Some(horner(&p) / denom)
                }
            })));
        }
        Err(Error::InvalidInput(format!(
            "unknown function '{name}' (expected powN, exp, or rational:../..)"
        )))
    }

    /// Series coefficient lists in JSON: either a bare array of `[w,x,y,z]`
    /// quaternions (read as a left series) or
    /// `{"chirality": "left"|"right", "coeffs": [[w,x,y,z],..], "radius": R}`.
    pub fn from_series_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct SeriesSpec {
            #[serde(default = "default_chirality")]
            chirality: String,
            coeffs: Vec<Quaternion>,
            #[serde(default)]
            radius: Option<f64>,
        }
        fn default_chirality() -> String {
            "left".to_string()
        }
        let spec: SeriesSpec = if text.trim_start().starts_with('[') {
            SeriesSpec {
                chirality: "left".to_string(),
                coeffs: serde_json::from_str(text)
                    .map_err(|e| Error::InvalidInput(format!("bad series JSON: {e}")))?,
                radius: None,
            }
        } else {
            serde_json::from_str(text)
                .map_err(|e| Error::InvalidInput(format!("bad series JSON: {e}")))?
        };
        match spec.chirality.as_str() {
            "left" => Ok(SliceFunction::LeftSeries {
                coeffs: spec.coeffs,
                radius: spec.radius,
            }),
            "right" => Ok(SliceFunction::RightSeries {
                coeffs: spec.coeffs,
                radius: spec.radius,
            }),
            other => Err(Error::InvalidInput(format!(
                "chirality must be left or right, got '{other}'"
            ))),
        }
    }

    /// The monomial `q^n` as a left series.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Quaternion::default(); n + 1];
        coeffs[n] = ONE;
        SliceFunction::LeftSeries {
            coeffs,
            radius: None,
        }
    }
}

fn check_radius(q: Quaternion, radius: Option<f64>) -> Result<()> {
    if let Some(r) = radius {
        if q.norm() >= r {
            return Err(Error::DivergentSeries);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{E1, E2, E3};

    fn assert_close(a: Quaternion, b: Quaternion, tol: f64) {
        assert!((a - b).norm() <= tol, "{a} != {b}");
    }

    #[test]
    fn identity_stem_reproduces_q() {
        let f = SliceFunction::from_name("pow1").unwrap();
        for q in [
            Quaternion::new(0.5, 1.0, -2.0, 0.25),
            E2,
            Quaternion::from_real(-3.0),
        ] {
            assert_close(f.eval(q).unwrap(), q, 1e-14);
        }
    }

    #[test]
    fn square_stem_matches_direct_power() {
        let f = SliceFunction::from_name("pow2").unwrap();
        let q = ONE + E1;
        assert_close(f.eval(q).unwrap(), 2.0 * E1, 1e-13);
        for k in 0..20 {
            let q = Quaternion::new(
                (k as f64 * 0.37).sin(),
                (k as f64 * 0.71).cos(),
                (k as f64 * 1.3).sin(),
                (k as f64 * 0.11).cos() - 0.4,
            );
            assert_close(f.eval(q).unwrap(), q * q, 1e-12 * (1.0 + q.norm_sqr()));
        }
    }

    #[test]
    fn exp_stem_matches_quaternion_exponential() {
        let f = SliceFunction::from_name("exp").unwrap();
        for q in [
            E1,
            Quaternion::new(0.5, 1.0, 2.0, -1.0),
            Quaternion::new(-0.3, 0.0, 0.7, 0.0),
        ] {
            let sp = q.slice_decompose();
            let expect = Quaternion::from_real(sp.u.exp() * sp.v.cos())
                + sp.j.unwrap().as_quaternion() * (sp.u.exp() * sp.v.sin());
            assert_close(f.eval(q).unwrap(), expect, 1e-12 * sp.u.exp().max(1.0));
        }
        // Real axis: exp(u) with zero imaginary part.
        let v = f.eval(Quaternion::from_real(1.0)).unwrap();
        assert_close(v, Quaternion::from_real(1f64.exp()), 1e-14);
    }

    #[test]
    fn left_series_multiplies_on_the_right() {
        let f = SliceFunction::LeftSeries {
            coeffs: vec![Quaternion::default(), E1],
            radius: None,
        };
        // q e1 at q = 1 + e2 -> e1 - e3
        let v = f.eval(ONE + E2).unwrap();
        assert_close(v, E1 - E3, 1e-15);
        // Constant series.
        let c = SliceFunction::LeftSeries {
            coeffs: vec![ONE],
            radius: None,
        };
        assert_close(
            c.eval(Quaternion::new(3.0, -1.0, 0.5, 2.0)).unwrap(),
            ONE,
            1e-15,
        );
    }

    #[test]
    fn right_series_multiplies_on_the_left() {
        let f = SliceFunction::RightSeries {
            coeffs: vec![Quaternion::default(), E1],
            radius: None,
        };
        // e1 q at q = 1 + e2 -> e1 + e3
        let v = f.eval(ONE + E2).unwrap();
        assert_close(v, E1 + E3, 1e-15);
    }

    #[test]
    fn non_real_stem_is_rejected_on_the_real_axis() {
        // f0(z) = i z has beta(u, 0) = u, so its lift is undefined on R \ {0}.
        let stem = StemFunction::new("iz", |z| Some(Complex64::new(0.0, 1.0) * z));
        let f = tf_extend(stem);
        assert!(matches!(
            f.eval(Quaternion::from_real(1.0)),
            Err(Error::StemNotReal { .. })
        ));
        // Off the real axis the lift is fine.
        assert!(f.eval(ONE + E1).is_ok());
    }

    #[test]
    fn series_radius_is_enforced() {
        let f = SliceFunction::LeftSeries {
            coeffs: vec![ONE, ONE],
            radius: Some(2.0),
        };
        assert!(f.eval(Quaternion::from_real(1.0)).is_ok());
        assert_eq!(
            f.eval(Quaternion::from_real(2.5)),
            Err(Error::DivergentSeries)
        );
    }

    #[test]
    fn rational_stem_reports_poles() {
        // 1 / (1 + z^2) has poles at +-i.
        let f = SliceFunction::from_name("rational:1/1,0,1").unwrap();
        let v = f.eval(Quaternion::from_real(1.0)).unwrap();
        assert_close(v, Quaternion::from_real(0.5), 1e-14);
        assert_eq!(f.eval(E3), Err(Error::OutsideDomain));
    }

    #[test]
    fn series_json_forms() {
        let f = SliceFunction::from_series_json("[[0,0,0,0],[0,1,0,0]]").unwrap();
        assert_close(f.eval(ONE + E2).unwrap(), E1 - E3, 1e-15);
        let f = SliceFunction::from_series_json(
            r#"{"chirality":"right","coeffs":[[0,0,0,0],[0,1,0,0]]}"#,
        )
        .unwrap();
        assert_close(f.eval(ONE + E2).unwrap(), E1 + E3, 1e-15);
        assert!(SliceFunction::from_series_json("nonsense").is_err());
    }

    #[test]
    fn representation_is_consistent_across_units() {
        // For intrinsic f the (alpha, beta) parts cannot depend on J.
        let f = SliceFunction::from_name("pow3").unwrap();
        let (u, v) = (0.8, 1.7);
        let units = [E1, E2, (E1 + E3) * (0.5f64.sqrt())];
        let mut values = Vec::new();
        for j in units {
            let q = Quaternion::from_real(u) + j * v;
            let val = f.eval(q).unwrap();
            // alpha = real part, beta = component along j
            let alpha = val.w;
            let beta = (val.imag() * j.conj()).w;
            values.push((alpha, beta));
        }
        for w in values.windows(2) {
            assert!((w[0].0 - w[1].0).abs() <= 1e-13);
            assert!((w[0].1 - w[1].1).abs() <= 1e-13);
        }
    }
}
