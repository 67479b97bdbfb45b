//! Pointwise kernels of the slice Cauchy theory and their series forms.
//!
//! All kernels are assembled in the exact factor order of their defining
//! formulas; no simplification assumes commutativity. With
//! `Qcs(s, q) = s^2 - 2 Re(q) s + |q|^2`:
//!
//! ```text
//! SL  = (s - qbar) Qcs^-1          SR  = Qcs^-1 (s - qbar)
//! FL  = -4 (s - qbar) Qcs^-2       FR  = -4 Qcs^-2 (s - qbar)
//! P2L = -FL s + q0 FL              P2R = -s FR + q0 FR
//! ```
//!
//! `P2L` is the conjugate Fueter derivative of `SL` in `q` and generates the
//! order-2 polyanalytic integral representation; `FL` is the Laplacian of
//! `SL` and generates the monogenic one.

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::symbolic::appell_eval;
use crate::Side;

/// Kernel selector shared by the pointwise and the operator calculus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelKind {
    SL,
    SR,
    FL,
    FR,
    P2L,
    P2R,
}

impl KernelKind {
    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_uppercase().as_str() {
            "SL" => Ok(Self::SL),
            "SR" => Ok(Self::SR),
            "FL" => Ok(Self::FL),
            "FR" => Ok(Self::FR),
            "P2L" => Ok(Self::P2L),
            "P2R" => Ok(Self::P2R),
            other => Err(Error::InvalidInput(format!(
                "unknown kernel kind '{other}'"
            ))),
        }
    }
}

/// The commutative pseudo-resolvent factor `s^2 - 2 Re(q) s + |q|^2`;
/// vanishes exactly when `s` lies on the sphere `[q]`.
pub fn qcs(s: Quaternion, q: Quaternion) -> Quaternion {
    s * s - s * (2.0 * q.re()) + Quaternion::from_real(q.norm_sqr())
}

/// Evaluate one of the six kernels at `(s, q)` with `s` off the sphere `[q]`.
pub fn kernel_eval(kind: KernelKind, s: Quaternion, q: Quaternion) -> Result<Quaternion> {
    if s.same_sphere(&q) {
        return Err(Error::OnSpectrumSphere);
    }
    let qcs_inv = qcs(s, q).inv().map_err(|_| Error::OnSpectrumSphere)?;
    let s_minus_qbar = s - q.conj();
    match kind {
        KernelKind::SL => Ok(s_minus_qbar * qcs_inv),
        KernelKind::SR => Ok(qcs_inv * s_minus_qbar),
        KernelKind::FL => Ok(s_minus_qbar * (qcs_inv * qcs_inv) * -4.0),
        KernelKind::FR => Ok((qcs_inv * qcs_inv) * s_minus_qbar * -4.0),
        KernelKind::P2L => {
            let fl = s_minus_qbar * (qcs_inv * qcs_inv) * -4.0;
            Ok(-(fl * s) + fl * q.re())
        }
        KernelKind::P2R => {
            let fr = (qcs_inv * qcs_inv) * s_minus_qbar * -4.0;
            Ok(-(s * fr) + fr * q.re())
        }
    }
}

/// Tail bound of the truncated conjugate-Fueter kernel series after `n`
/// terms: the moduli are majorized by `4 n |q|^(n-1) |s|^(-1-n)`, and
/// `sum_{m>n} m rho^(m-1) = rho^n ((n+1) - n rho) / (1-rho)^2`.
pub fn dbar_series_tail(n: usize, rho: f64, s_abs: f64) -> f64 {
    let nf = n as f64;
    4.0 / (s_abs * s_abs) * rho.powi(n as i32) * ((nf + 1.0) - nf * rho)
        / ((1.0 - rho) * (1.0 - rho))
}

/// Smallest truncation length whose analytic tail bound is at most `tol`.
pub fn dbar_series_terms(rho: f64, s_abs: f64, tol: f64) -> Result<usize> {
    if rho >= 1.0 || rho.is_nan() {
        return Err(Error::NotInDisk);
    }
    let mut n = 1;
    while dbar_series_tail(n, rho, s_abs) > tol {
        n += 1;
        if n > 2_000_000 {
            return Err(Error::InvalidInput(format!(
                "series truncation for rho = {rho} and tol = {tol} is impractically long"
            )));
        }
    }
    Ok(n)
}

fn check_in_disk(s: Quaternion, q: Quaternion) -> Result<(f64, f64)> {
    let (qs, ss) = (q.norm(), s.norm());
    if qs >= ss || ss == 0.0 {
        return Err(Error::NotInDisk);
    }
    Ok((qs / ss, ss))
}

/// Partial sum of the conjugate-Fueter kernel series with exactly `n_terms`
/// terms: `2 sum_n (n q^(n-1) + sum_{k=1..n} q^(n-k) qbar^(k-1)) s^(-1-n)`
/// for the left side, with the `s` powers moved to the left for the right
/// side. Converges to `P2L`/`P2R` for `|q| < |s|`.
pub fn dbar_kernel_series_partial(
    side: Side,
    s: Quaternion,
    q: Quaternion,
    n_terms: usize,
) -> Result<Quaternion> {
    check_in_disk(s, q)?;
    let s_inv = s.inv()?;
    let q_pow = powers(q, n_terms);
    let qb_pow = powers(q.conj(), n_terms);
    let mut s_factor = s_inv * s_inv; // s^(-1-n) at n = 1
    let mut acc = Quaternion::default();
    for n in 1..=n_terms {
        let mut coeff = q_pow[n - 1] * (n as f64);
        for k in 1..=n {
            coeff += q_pow[n - k] * qb_pow[k - 1];
        }
        coeff = coeff * 2.0;
        acc += match side {
            Side::Left => coeff * s_factor,
            Side::Right => s_factor * coeff,
        };
        s_factor = s_factor * s_inv;
    }
    Ok(acc)
}

/// Truncated conjugate-Fueter kernel series with the truncation length
/// chosen from the analytic tail bound so the result is within `tol` of the
/// closed form `P2L`/`P2R`.
pub fn dbar_kernel_series(
    side: Side,
    s: Quaternion,
    q: Quaternion,
    tol: f64,
) -> Result<Quaternion> {
    let (rho, s_abs) = check_in_disk(s, q)?;
    let n = dbar_series_terms(rho, s_abs, tol)?;
    dbar_kernel_series_partial(side, s, q, n)
}

/// Partial sum of the same series resummed through Clifford-Appell
/// polynomials: `2 sum_n n [ (n+1) Q_(n-1) - q0 (n-1) Q_(n-2) ] s^(-1-n)`;
/// term-by-term equal to the plain form.
pub fn appell_kernel_series_partial(
    side: Side,
    s: Quaternion,
    q: Quaternion,
    n_terms: usize,
) -> Result<Quaternion> {
    check_in_disk(s, q)?;
    let s_inv = s.inv()?;
    let q0 = q.re();
    // Q_l(q, qbar) for l = 0 .. n_terms - 1.
    let appell_vals: Vec<Quaternion> = (0..n_terms as u32).map(|l| appell_eval(l, q)).collect();
    let mut s_factor = s_inv * s_inv;
    let mut acc = Quaternion::default();
    for n in 1..=n_terms {
        let nf = n as f64;
        let mut coeff = appell_vals[n - 1] * ((nf + 1.0) * 2.0 * nf);
        if n >= 2 {
            coeff += appell_vals[n - 2] * (-2.0 * nf * (nf - 1.0) * q0);
        }
        acc += match side {
            Side::Left => coeff * s_factor,
            Side::Right => s_factor * coeff,
        };
        s_factor = s_factor * s_inv;
    }
    Ok(acc)
}

/// Appell-form kernel series truncated by the shared tail bound.
pub fn appell_kernel_series(
    side: Side,
    s: Quaternion,
    q: Quaternion,
    tol: f64,
) -> Result<Quaternion> {
    let (rho, s_abs) = check_in_disk(s, q)?;
    let n = dbar_series_terms(rho, s_abs, tol)?;
    appell_kernel_series_partial(side, s, q, n)
}

/// Truncated Cauchy kernel expansion `sum_{n=0..N} q^n s^(-1-n)` (left) or
/// `s^(-1-n) q^n` (right); geometric tail `|s|^-1 rho^(N+1) / (1 - rho)`.
pub fn cauchy_kernel_series(
    side: Side,
    s: Quaternion,
    q: Quaternion,
    tol: f64,
) -> Result<Quaternion> {
    let (rho, s_abs) = check_in_disk(s, q)?;
    let mut n_terms = 1usize;
    while rho.powi(n_terms as i32 + 1) / (s_abs * (1.0 - rho)) > tol {
        n_terms += 1;
        if n_terms > 2_000_000 {
            return Err(Error::InvalidInput(
                "cauchy series truncation too long".into(),
            ));
        }
    }
    let s_inv = s.inv()?;
    let q_pow = powers(q, n_terms);
    let mut s_factor = s_inv;
    let mut acc = Quaternion::default();
    for &qp in &q_pow {
        acc += match side {
            Side::Left => qp * s_factor,
            Side::Right => s_factor * qp,
        };
        s_factor = s_factor * s_inv;
    }
    Ok(acc)
}

fn powers(q: Quaternion, max: usize) -> Vec<Quaternion> {
    let mut v = Vec::with_capacity(max + 1);
    v.push(crate::quaternion::ONE);
    for i in 1..=max {
        let prev = v[i - 1];
        v.push(prev * q);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{E1, E2, ONE};

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn qcs_values() {
        assert_eq!(
            qcs(Quaternion::from_real(2.0), E1),
            Quaternion::from_real(5.0)
        );
        // s real and q = s: degenerate sphere.
        let s = Quaternion::from_real(1.5);
        assert!(qcs(s, s).norm() <= 1e-15);
        // Two distinct units share the sphere S, so qcs vanishes.
        assert!(qcs(E1, E2).norm() <= 1e-15);
    }

    #[test]
    fn kernel_closed_forms() {
        let s = Quaternion::from_real(2.0);
        let sl = kernel_eval(KernelKind::SL, s, E1).unwrap();
        assert!(close(sl, (s + E1) / 5.0, 1e-14));
        let fl = kernel_eval(KernelKind::FL, s, E1).unwrap();
        assert!(close(fl, (s + E1) * (-4.0 / 25.0), 1e-14));
        let p2l = kernel_eval(KernelKind::P2L, s, E1).unwrap();
        assert!(close(
            p2l,
            Quaternion::new(16.0 / 25.0, 8.0 / 25.0, 0.0, 0.0),
            1e-14
        ));
        // Real q degenerates to the complex Cauchy kernel (s - q0)^-1.
        let q0 = Quaternion::from_real(0.5);
        let sl = kernel_eval(KernelKind::SL, s, q0).unwrap();
        assert!(close(sl, (s - q0).inv().unwrap(), 1e-14));
        // On the sphere the kernel is rejected.
        assert_eq!(
            kernel_eval(KernelKind::SL, E2, E1),
            Err(Error::OnSpectrumSphere)
        );
    }

    #[test]
    fn fl_satisfies_the_commutation_identity() {
        // FL(s,q) s - q FL(s,q) = -4 Qcs(s,q)^-1
        let pts = [
            (Quaternion::from_real(2.0), E1),
            (
                Quaternion::new(1.0, 0.0, 3.0, 0.0),
                Quaternion::new(0.5, 1.0, -0.5, 0.25),
            ),
            (
                Quaternion::new(-2.0, 1.0, 0.0, 1.0),
                Quaternion::new(0.1, 0.3, 0.2, -0.6),
            ),
        ];
        for (s, q) in pts {
            let fl = kernel_eval(KernelKind::FL, s, q).unwrap();
            let lhs = fl * s - q * fl;
            let rhs = qcs(s, q).inv().unwrap() * -4.0;
            assert!(close(lhs, rhs, 1e-12 * (1.0 + rhs.norm())));
        }
    }

    #[test]
    fn dbar_series_matches_p2_closed_form() {
        let cases = [
            (Quaternion::from_real(2.0), E1),
            (Quaternion::from_real(10.0), Quaternion::default()),
            (Quaternion::new(0.0, 0.0, 3.0, 0.0), ONE + E1 * 0.5),
        ];
        for (s, q) in cases {
            for side in [Side::Left, Side::Right] {
                let kind = if side == Side::Left {
                    KernelKind::P2L
                } else {
                    KernelKind::P2R
                };
                let closed = kernel_eval(kind, s, q).unwrap();
                let series = dbar_kernel_series(side, s, q, 1e-10).unwrap();
                assert!(close(series, closed, 1e-9), "side {side:?} s {s} q {q}");
                let via_appell = appell_kernel_series(side, s, q, 1e-10).unwrap();
                assert!(close(via_appell, closed, 1e-9));
            }
        }
        // q = 0: only the n = 1 term survives and P2L(s, 0) = 4 s^-2.
        let s = Quaternion::from_real(10.0);
        let v = dbar_kernel_series_partial(Side::Left, s, Quaternion::default(), 1).unwrap();
        assert!(close(v, Quaternion::from_real(0.04), 1e-15));
        assert!(close(
            kernel_eval(KernelKind::P2L, s, Quaternion::default()).unwrap(),
            Quaternion::from_real(0.04),
            1e-15
        ));
    }

    #[test]
    fn series_requires_q_inside_the_disk() {
        let s = Quaternion::from_real(1.0);
        let q = Quaternion::from_real(2.0);
        assert_eq!(
            dbar_kernel_series(Side::Left, s, q, 1e-6),
            Err(Error::NotInDisk)
        );
        assert_eq!(
            cauchy_kernel_series(Side::Left, s, q, 1e-6),
            Err(Error::NotInDisk)
        );
    }

    #[test]
    fn cauchy_series_matches_sl() {
        let s = Quaternion::new(2.0, 1.0, 0.0, 0.0);
        let q = Quaternion::new(0.3, 0.0, 0.7, 0.2);
        let closed = kernel_eval(KernelKind::SL, s, q).unwrap();
        let series = cauchy_kernel_series(Side::Left, s, q, 1e-11).unwrap();
        assert!(close(series, closed, 1e-10));
        let closed_r = kernel_eval(KernelKind::SR, s, q).unwrap();
        let series_r = cauchy_kernel_series(Side::Right, s, q, 1e-11).unwrap();
        assert!(close(series_r, closed_r, 1e-10));
    }

    #[test]
    fn tail_bound_is_monotone_and_honest() {
        let (rho, s_abs) = (0.5, 2.0);
        let n = dbar_series_terms(rho, s_abs, 1e-9).unwrap();
        assert!(dbar_series_tail(n, rho, s_abs) <= 1e-9);
        assert!(dbar_series_tail(n - 1, rho, s_abs) > 1e-9);
    }

    #[test]
    fn slowly_convergent_series_still_meets_the_bound() {
        // rho = 0.95: hundreds of terms, still within tolerance of P2L.
        let s = Quaternion::from_real(2.0);
        let q = E1 * 1.9;
        let n = dbar_series_terms(0.95, 2.0, 1e-9).unwrap();
        assert!(n > 300, "expected a long truncation, got {n}");
        let closed = kernel_eval(KernelKind::P2L, s, q).unwrap();
        let series = dbar_kernel_series(Side::Left, s, q, 1e-9).unwrap();
        assert!(close(series, closed, 1e-9));
    }
}
