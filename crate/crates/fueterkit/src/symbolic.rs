//! Exact symbolic algebra for polynomials in the commuting pair `(q, qbar)`
//! with rational coefficients.
//!
//! Two representations are kept in exact correspondence:
//!
//! * [`QQbarPoly`]: `sum c_{a,b} q^a qbar^b`, the form in which the
//!   monomial identities are stated;
//! * [`AxialPoly`]: `A(q0, r) + omega * B(q0, r)` with `A` even and `B` odd
//!   in `r`, the form in which the Fueter operators have closed expressions:
//!
//!   ```text
//!   D(A + wB)    = (dA/dq0 - dB/dr - 2B/r) + w (dB/dq0 + dA/dr)
//!   Dbar(A + wB) = (dA/dq0 + dB/dr + 2B/r) + w (dB/dq0 - dA/dr)
//!   ```
//!
//! `B/r` is exact because `B` is odd in `r`. All arithmetic uses
//! arbitrary-precision rationals so the identity checks are zero-tolerance.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::integer::binomial;
use num::traits::{One, ToPrimitive, Zero};
use num::BigRational;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, ONE as Q_ONE};

pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn binom(n: u32, k: u32) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// Which Fueter operator to apply in axial coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FueterOp {
    D,
    Dbar,
    Delta,
}

/// Which closed form of the Laplacian of `q^n` to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaplacianForm {
    Direct,
    Appell,
}

// ---------------------------------------------------------------------------
// QQbarPoly
// ---------------------------------------------------------------------------

/// Polynomial `sum c_{a,b} q^a qbar^b` over the rationals. The symbols `q`
/// and `qbar` commute, so the exponent map is canonical; zero coefficients
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QQbarPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl QQbarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    /// The monomial `c * q^a * qbar^b`.
    pub fn monomial(a: u32, b: u32, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, Rat::one())
    }

    pub fn qbar() -> Self {
        Self::monomial(0, 1, Rat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero();
        for (&(a, b), coeff) in &self.terms {
            out.add_term(a, b, coeff * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Numeric evaluation at a quaternion point; `q` and `qbar` commute as
    /// values, so `q^a qbar^b` is unambiguous.
    pub fn eval_quat(&self, q: Quaternion) -> Quaternion {
        let max_a = self.terms.keys().map(|&(a, _)| a).max().unwrap_or(0);
        let max_b = self.terms.keys().map(|&(_, b)| b).max().unwrap_or(0);
        let qp = power_table(q, max_a);
        let qbp = power_table(q.conj(), max_b);
        let mut acc = Quaternion::default();
        for (&(a, b), c) in &self.terms {
            let c = c.to_f64().expect("rational out of f64 range");
            acc += (qp[a as usize] * qbp[b as usize]) * c;
        }
        acc
    }

    /// Exact evaluation in the commutative ring `Q[w]/(w^2+1)` at
    /// `q = q0 + w r`, `qbar = q0 - w r`. Returns `(re, im)` rationals.
    pub fn eval_exact(&self, q0: &Rat, r: &Rat) -> (Rat, Rat) {
        let q = (q0.clone(), r.clone());
        let qbar = (q0.clone(), -r.clone());
        let mut acc = (Rat::zero(), Rat::zero());
        for (&(a, b), c) in &self.terms {
            let mut t = (c.clone(), Rat::zero());
            for _ in 0..a {
                t = cmul(&t, &q);
            }
            for _ in 0..b {
                t = cmul(&t, &qbar);
            }
            acc.0 += t.0;
            acc.1 += t.1;
        }
        acc
    }

    /// Substitute `q = q0 + w r`, `qbar = q0 - w r` (`w^2 = -1`) and collect
    /// the axial parts. Always succeeds; the image satisfies the parity
    /// invariants by construction.
    pub fn to_axial(&self) -> AxialPoly {
        let mut a_part = BivarPoly::zero();
        let mut b_part = BivarPoly::zero();
        for (&(a, b), c) in &self.terms {
            // (q0 + x)^a (q0 - x)^b with x = w r:
            // sum_{i,j} C(a,i) C(b,j) (-1)^j q0^{a+b-i-j} x^{i+j}
            for i in 0..=a {
                for j in 0..=b {
                    let k = i + j;
                    let mut coeff = c * Rat::from_integer(binom(a, i) * binom(b, j));
                    if j % 2 == 1 {
                        coeff = -coeff;
                    }
                    // x^k = (-1)^(k/2) r^k       (k even)
                    //     = (-1)^((k-1)/2) r^k w (k odd)
                    if (k / 2) % 2 == 1 {
                        coeff = -coeff;
                    }
                    let q0_exp = a + b - k;
                    if k % 2 == 0 {
                        a_part.add_term(q0_exp, k, coeff);
                    } else {
                        b_part.add_term(q0_exp, k, coeff);
                    }
                }
            }
        }
        AxialPoly {
            a: a_part,
            b: b_part,
        }
    }

    /// Canonical text form `c*q^a*qbar^b + ...` used in CLI reports.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        // Highest total degree first, then highest q-power.
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (std::cmp::Reverse(a + b), std::cmp::Reverse(a)));
        for (a, b) in keys {
            let c = &self.terms[&(a, b)];
            let mut term = c.to_string();
            if a > 0 {
                term.push_str(&format!("*q^{a}"));
            }
            if b > 0 {
                term.push_str(&format!("*qbar^{b}"));
            }
            parts.push(term);
        }
        parts.join(" + ")
    }
}

impl fmt::Display for QQbarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

fn cmul(a: &(Rat, Rat), b: &(Rat, Rat)) -> (Rat, Rat) {
    (&a.0 * &b.0 - &a.1 * &b.1, &a.0 * &b.1 + &a.1 * &b.0)
}

fn power_table(q: Quaternion, max: u32) -> Vec<Quaternion> {
    let mut v = Vec::with_capacity(max as usize + 1);
    v.push(Q_ONE);
    for i in 1..=max as usize {
        let prev = v[i - 1];
        v.push(prev * q);
    }
    v
}

// ---------------------------------------------------------------------------
// BivarPoly
// ---------------------------------------------------------------------------

/// Bivariate polynomial in `(q0, r)` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, c);
        p
    }

    /// The monomial `c * q0^i * r^j`.
    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = Self::zero();
        for (&(i, j), coeff) in &self.terms {
            out.add_term(i, j, coeff * c);
        }
        out
    }

    pub fn d_dq0(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if i > 0 {
                out.add_term(i - 1, j, c * rat_int(i as i64));
            }
        }
        out
    }

    pub fn d_dr(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j > 0 {
                out.add_term(i, j - 1, c * rat_int(j as i64));
            }
        }
        out
    }

    /// Exact division by `r`; every term must carry a positive `r` power.
    pub fn div_r(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                return Err(Error::NotAxiallySymmetric);
            }
            out.add_term(i, j - 1, c.clone());
        }
        Ok(out)
    }

    pub fn mul_q0(&self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i + 1, j, c.clone());
        }
        out
    }

    pub fn is_even_in_r(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j % 2 == 0)
    }

    pub fn is_odd_in_r(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j % 2 == 1)
    }

    pub fn eval_f64(&self, q0: f64, r: f64) -> f64 {
        let mut acc = 0.0;
        for (&(i, j), c) in &self.terms {
            let c = c.to_f64().expect("rational out of f64 range");
            acc += c * q0.powi(i as i32) * r.powi(j as i32);
        }
        acc
    }

    pub fn eval_exact(&self, q0: &Rat, r: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t *= q0;
            }
            for _ in 0..j {
                t *= r;
            }
            acc += t;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// AxialPoly
// ---------------------------------------------------------------------------

/// Axial form `A(q0, r) + omega B(q0, r)` of an intrinsic polynomial,
/// where `omega = Im(q)/|Im(q)|` and `r = |Im(q)|`; `A` is even in `r` and
/// `B` is odd, so `B/r` is again a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxialPoly {
    pub a: BivarPoly,
    pub b: BivarPoly,
}

impl AxialPoly {
    /// Build from parts, enforcing the parity invariants.
    pub fn new(a: BivarPoly, b: BivarPoly) -> Result<Self> {
        if !a.is_even_in_r() || !b.is_odd_in_r() {
            return Err(Error::NotAxiallySymmetric);
        }
        Ok(Self { a, b })
    }

    pub fn zero() -> Self {
        Self {
            a: BivarPoly::zero(),
            b: BivarPoly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            a: self.a.sub(&other.a),
            b: self.b.sub(&other.b),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self {
            a: self.a.scale(c),
            b: self.b.scale(c),
        }
    }

    /// Multiplication by the real coordinate `q0`.
    pub fn mul_q0(&self) -> Self {
        Self {
            a: self.a.mul_q0(),
            b: self.b.mul_q0(),
        }
    }

    /// Inverse of [`QQbarPoly::to_axial`]: substitute `q0 = (q + qbar)/2`,
    /// `omega r = (q - qbar)/2`, `r^2 = -((q - qbar)/2)^2`.
    pub fn to_qqbar(&self) -> QQbarPoly {
        let half = rat(1, 2);
        let s = QQbarPoly::q().add(&QQbarPoly::qbar()).scale(&half); // (q+qbar)/2
        let p = QQbarPoly::q().sub(&QQbarPoly::qbar()).scale(&half); // (q-qbar)/2
        let max_i = self
            .a
            .terms
            .keys()
            .chain(self.b.terms.keys())
            .map(|&(i, _)| i)
            .max()
            .unwrap_or(0);
        let max_j = self
            .a
            .terms
            .keys()
            .chain(self.b.terms.keys())
            .map(|&(_, j)| j)
            .max()
            .unwrap_or(0);
        let s_pow: Vec<QQbarPoly> = {
            let mut v = vec![QQbarPoly::one()];
            for i in 1..=max_i as usize {
                let next = v[i - 1].mul(&s);
                v.push(next);
            }
            v
        };
        let p_pow: Vec<QQbarPoly> = {
            let mut v = vec![QQbarPoly::one()];
            for j in 1..=max_j as usize {
                let next = v[j - 1].mul(&p);
                v.push(next);
            }
            v
        };
        let mut out = QQbarPoly::zero();
        // A: r^(2m) -> (-1)^m P^(2m)
        for (&(i, j), c) in &self.a.terms {
            let m = j / 2;
            let mut coeff = c.clone();
            if m % 2 == 1 {
                coeff = -coeff;
            }
            out = out.add(&s_pow[i as usize].mul(&p_pow[j as usize]).scale(&coeff));
        }
        // B: omega r^(2m+1) -> (-1)^m P^(2m+1)
        for (&(i, j), c) in &self.b.terms {
            let m = (j - 1) / 2;
            let mut coeff = c.clone();
            if m % 2 == 1 {
                coeff = -coeff;
            }
            out = out.add(&s_pow[i as usize].mul(&p_pow[j as usize]).scale(&coeff));
        }
        out
    }

    /// Numeric evaluation at a quaternion point via slice decomposition.
    pub fn eval_quat(&self, q: Quaternion) -> Quaternion {
        let sp = q.slice_decompose();
        let a = self.a.eval_f64(sp.u, sp.v);
        // B is odd in r, so it vanishes identically at real points.
        match sp.j {
            Some(j) => {
                let b = self.b.eval_f64(sp.u, sp.v);
                Quaternion::from_real(a) + j.as_quaternion() * b
            }
            None => Quaternion::from_real(a),
        }
    }

    /// `(A(q0, r), B(q0, r))` as exact rationals.
    pub fn eval_exact(&self, q0: &Rat, r: &Rat) -> (Rat, Rat) {
        (self.a.eval_exact(q0, r), self.b.eval_exact(q0, r))
    }
}

/// Apply `D`, `Dbar`, or `Delta = D Dbar = Dbar D` in axial coordinates.
/// The output is exact; `2B/r` never leaves the polynomial ring because `B`
/// is odd in `r`.
pub fn apply_operator_sym(op: FueterOp, p: &AxialPoly) -> AxialPoly {
    match op {
        FueterOp::D => {
            let b_over_r = p.b.div_r().expect("odd part must be divisible by r");
            let a =
                p.a.d_dq0()
                    .sub(&p.b.d_dr())
                    .sub(&b_over_r.scale(&rat_int(2)));
            let b = p.b.d_dq0().add(&p.a.d_dr());
            AxialPoly { a, b }
        }
        FueterOp::Dbar => {
            let b_over_r = p.b.div_r().expect("odd part must be divisible by r");
            let a =
                p.a.d_dq0()
                    .add(&p.b.d_dr())
                    .add(&b_over_r.scale(&rat_int(2)));
            let b = p.b.d_dq0().sub(&p.a.d_dr());
            AxialPoly { a, b }
        }
        FueterOp::Delta => apply_operator_sym(FueterOp::D, &apply_operator_sym(FueterOp::Dbar, p)),
    }
}

/// The right action `f op` on an intrinsic axial polynomial. With real
/// `A, B` the unit `omega` commutes through every product that appears, so
/// the component formulas coincide with the left action; this is the content
/// of the commutation identity for intrinsic polynomials.
pub fn apply_operator_sym_right(op: FueterOp, p: &AxialPoly) -> AxialPoly {
    apply_operator_sym(op, p)
}

// ---------------------------------------------------------------------------
// Monomial families
// ---------------------------------------------------------------------------

/// `Dbar q^n = 2 (n q^(n-1) + sum_{k=1..n} q^(n-k) qbar^(k-1))`, `n >= 1`.
pub fn dbar_monomial(n: i64) -> Result<QQbarPoly> {
    if n < 1 {
        return Err(Error::BadDegree(n));
    }
    let n = n as u32;
    let mut p = QQbarPoly::monomial(n - 1, 0, rat_int(2 * n as i64));
    for k in 1..=n {
        p.add_term(n - k, k - 1, rat_int(2));
    }
    Ok(p)
}

/// `D q^n = -2 sum_{k=1..n} q^(n-k) qbar^(k-1)`, `n >= 1`.
pub fn d_monomial(n: i64) -> Result<QQbarPoly> {
    if n < 1 {
        return Err(Error::BadDegree(n));
    }
    let n = n as u32;
    let mut p = QQbarPoly::zero();
    for k in 1..=n {
        p.add_term(n - k, k - 1, rat_int(-2));
    }
    Ok(p)
}

/// Clifford-Appell polynomial
/// `Q_l(q, qbar) = 2/((l+1)(l+2)) sum_{j=0..l} (l-j+1) q^(l-j) qbar^j`.
/// Homogeneous of degree `l` and axially monogenic: `D Q_l = 0` exactly.
pub fn appell(ell: u32) -> QQbarPoly {
    let denom = rat_int(((ell as i64) + 1) * ((ell as i64) + 2));
    let mut p = QQbarPoly::zero();
    for j in 0..=ell {
        let c = rat_int(2 * ((ell - j) as i64 + 1)) / denom.clone();
        p.add_term(ell - j, j, c);
    }
    p
}

/// `Dbar q^n` through the Appell decomposition
/// `2n sum_{k=0,1} q0^k (-1)^k (n+1-2k) Q_(n-1-k)(q, qbar)` with
/// `q0 = (q + qbar)/2`; agrees with [`dbar_monomial`] exactly. `n >= 2`.
pub fn dbar_monomial_appell(n: i64) -> Result<QQbarPoly> {
    if n < 2 {
        return Err(Error::BadDegree(n));
    }
    let nu = n as u32;
    // k = 0 term: 2n (n+1) Q_(n-1)
    let lead = appell(nu - 1).scale(&rat_int(2 * n * (n + 1)));
    // k = 1 term: -2n (n-1) q0 Q_(n-2) = -n (n-1) (q + qbar) Q_(n-2)
    let q0 = QQbarPoly::q().add(&QQbarPoly::qbar()).scale(&rat(1, 2));
    let second = q0.mul(&appell(nu - 2)).scale(&rat_int(-2 * n * (n - 1)));
    Ok(lead.add(&second))
}

/// `Delta q^n` for `n >= 2`, in either closed form:
/// direct `-4 sum_{k=1..n-1} (n-k) q^(n-k-1) qbar^(k-1)` or Appell
/// `-2n(n-1) Q_(n-2)`. The two expansions agree exactly.
pub fn laplacian_monomial(n: i64, form: LaplacianForm) -> Result<QQbarPoly> {
    if n < 2 {
        return Err(Error::BadDegree(n));
    }
    let nu = n as u32;
    match form {
        LaplacianForm::Direct => {
            let mut p = QQbarPoly::zero();
            for k in 1..nu {
                p.add_term(nu - k - 1, k - 1, rat_int(-4 * (n - (k as i64))));
            }
            Ok(p)
        }
        LaplacianForm::Appell => Ok(appell(nu - 2).scale(&rat_int(-2 * n * (n - 1)))),
    }
}

/// Polyanalytic decomposition `p = f0 + q0 f1` of an order-2 polyanalytic
/// axial polynomial: `f1 = D p`, `f0 = p - q0 D p`, both axially monogenic.
/// Fails with `NotPolyanalytic2` when `D^2 p != 0`.
pub fn polyanalytic_split(p: &AxialPoly) -> Result<(AxialPoly, AxialPoly)> {
    let dp = apply_operator_sym(FueterOp::D, p);
    let d2p = apply_operator_sym(FueterOp::D, &dp);
    if !d2p.is_zero() {
        return Err(Error::NotPolyanalytic2);
    }
    let f1 = dp;
    let f0 = p.sub(&f1.mul_q0());
    Ok((f0, f1))
}

/// Numeric Clifford-Appell value `Q_l(q, qbar)` at a quaternion point.
pub fn appell_eval(ell: u32, q: Quaternion) -> Quaternion {
    appell(ell).eval_quat(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{E1, E2};
    use proptest::prelude::*;

    fn q_pow(n: u32) -> AxialPoly {
        QQbarPoly::monomial(n, 0, Rat::one()).to_axial()
    }

    #[test]
    fn axial_of_low_powers() {
        // q -> A = q0, B = r
        let ax = q_pow(1);
        assert_eq!(ax.a, BivarPoly::monomial(1, 0, Rat::one()));
        assert_eq!(ax.b, BivarPoly::monomial(0, 1, Rat::one()));
        // q^2 -> A = q0^2 - r^2, B = 2 q0 r
        let ax = q_pow(2);
        let mut a = BivarPoly::monomial(2, 0, Rat::one());
        a.add_term(0, 2, rat_int(-1));
        assert_eq!(ax.a, a);
        assert_eq!(ax.b, BivarPoly::monomial(1, 1, rat_int(2)));
        // q qbar -> A = q0^2 + r^2, B = 0
        let ax = QQbarPoly::monomial(1, 1, Rat::one()).to_axial();
        let mut a = BivarPoly::monomial(2, 0, Rat::one());
        a.add_term(0, 2, rat_int(1));
        assert_eq!(ax.a, a);
        assert!(ax.b.is_zero());
    }

    #[test]
    fn operator_on_low_powers() {
        // Dbar q = 4, D q = -2, Delta q^2 = -4
        let dbar_q = apply_operator_sym(FueterOp::Dbar, &q_pow(1));
        assert_eq!(dbar_q.to_qqbar(), QQbarPoly::constant(rat_int(4)));
        let d_q = apply_operator_sym(FueterOp::D, &q_pow(1));
        assert_eq!(d_q.to_qqbar(), QQbarPoly::constant(rat_int(-2)));
        let lap_q2 = apply_operator_sym(FueterOp::Delta, &q_pow(2));
        assert_eq!(lap_q2.to_qqbar(), QQbarPoly::constant(rat_int(-4)));
    }

    #[test]
    fn dbar_monomial_small_cases() {
        assert_eq!(dbar_monomial(1).unwrap(), QQbarPoly::constant(rat_int(4)));
        // n = 2 -> 6q + 2qbar
        let mut expect = QQbarPoly::monomial(1, 0, rat_int(6));
        expect.add_term(0, 1, rat_int(2));
        assert_eq!(dbar_monomial(2).unwrap(), expect);
        // n = 3 -> 8q^2 + 2 q qbar + 2 qbar^2
        let mut expect = QQbarPoly::monomial(2, 0, rat_int(8));
        expect.add_term(1, 1, rat_int(2));
        expect.add_term(0, 2, rat_int(2));
        assert_eq!(dbar_monomial(3).unwrap(), expect);
        assert_eq!(dbar_monomial(0), Err(Error::BadDegree(0)));
    }

    #[test]
    fn appell_small_cases() {
        assert_eq!(appell(0), QQbarPoly::one());
        // Q_1 = (2q + qbar)/3
        let mut expect = QQbarPoly::monomial(1, 0, rat(2, 3));
        expect.add_term(0, 1, rat(1, 3));
        assert_eq!(appell(1), expect);
        // Q_2 = (3q^2 + 2 q qbar + qbar^2)/6
        let mut expect = QQbarPoly::monomial(2, 0, rat(3, 6));
        expect.add_term(1, 1, rat(2, 6));
        expect.add_term(0, 2, rat(1, 6));
        assert_eq!(appell(2), expect);
    }

    #[test]
    fn appell_decomposition_matches() {
        for n in 2..=12 {
            assert_eq!(
                dbar_monomial_appell(n).unwrap(),
                dbar_monomial(n).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(dbar_monomial_appell(1), Err(Error::BadDegree(1)));
    }

    #[test]
    fn laplacian_forms_agree() {
        assert_eq!(
            laplacian_monomial(2, LaplacianForm::Direct).unwrap(),
            QQbarPoly::constant(rat_int(-4))
        );
        let mut expect = QQbarPoly::monomial(1, 0, rat_int(-8));
        expect.add_term(0, 1, rat_int(-4));
        assert_eq!(
            laplacian_monomial(3, LaplacianForm::Direct).unwrap(),
            expect
        );
        for n in 2..=12 {
            assert_eq!(
                laplacian_monomial(n, LaplacianForm::Direct).unwrap(),
                laplacian_monomial(n, LaplacianForm::Appell).unwrap(),
                "n = {n}"
            );
        }
        assert_eq!(
            laplacian_monomial(1, LaplacianForm::Direct),
            Err(Error::BadDegree(1))
        );
    }

    #[test]
    fn appell_is_monogenic() {
        for ell in 0..=12 {
            let d = apply_operator_sym(FueterOp::D, &appell(ell).to_axial());
            assert!(d.is_zero(), "D Q_{ell} != 0");
        }
    }

    #[test]
    fn split_examples() {
        // p = 1 -> (1, 0)
        let one = QQbarPoly::one().to_axial();
        let (f0, f1) = polyanalytic_split(&one).unwrap();
        assert_eq!(f0.to_qqbar(), QQbarPoly::one());
        assert!(f1.is_zero());
        // p = q0 -> (0, 1)
        let q0 = AxialPoly::new(BivarPoly::monomial(1, 0, Rat::one()), BivarPoly::zero()).unwrap();
        let (f0, f1) = polyanalytic_split(&q0).unwrap();
        assert!(f0.is_zero());
        assert_eq!(f1.to_qqbar(), QQbarPoly::one());
        // p = Dbar q^2: f1 constant, both parts monogenic, recomposition holds
        let p = dbar_monomial(2).unwrap().to_axial();
        let (f0, f1) = polyanalytic_split(&p).unwrap();
        assert_eq!(f1.to_qqbar(), QQbarPoly::constant(rat_int(-4)));
        assert!(apply_operator_sym(FueterOp::D, &f0).is_zero());
        assert_eq!(f0.add(&f1.mul_q0()), p);
        // q^2 itself is not polyanalytic of order 2
        assert_eq!(polyanalytic_split(&q_pow(2)), Err(Error::NotPolyanalytic2));
    }

    #[test]
    fn axial_parity_is_enforced() {
        let bad = AxialPoly::new(BivarPoly::monomial(0, 1, Rat::one()), BivarPoly::zero());
        assert_eq!(bad.unwrap_err(), Error::NotAxiallySymmetric);
    }

    #[test]
    fn numeric_eval_matches_direct_powers() {
        let q = Quaternion::new(0.3, -0.7, 0.2, 0.9);
        for n in 0..=6u32 {
            let p = QQbarPoly::monomial(n, 0, Rat::one());
            let direct = q.powu(n);
            assert!((p.eval_quat(q) - direct).norm() <= 1e-12 * (1.0 + direct.norm()));
            assert!((p.to_axial().eval_quat(q) - direct).norm() <= 1e-12 * (1.0 + direct.norm()));
        }
        // Mixed monomial q^2 qbar at a point off the real axis.
        let p = QQbarPoly::monomial(2, 1, Rat::one());
        let direct = q.powu(2) * q.conj();
        assert!((p.eval_quat(q) - direct).norm() <= 1e-12 * (1.0 + direct.norm()));
        // Real point: axial evaluation drops the odd part automatically.
        let r = Quaternion::from_real(1.5);
        assert!((p.to_axial().eval_quat(r) - p.eval_quat(r)).norm() <= 1e-12);
        let _ = (E1, E2);
    }

    fn arb_poly() -> impl Strategy<Value = QQbarPoly> {
        proptest::collection::vec(((0u32..4, 0u32..4), -6i64..7), 0..6).prop_map(|terms| {
            let mut p = QQbarPoly::zero();
            for ((a, b), c) in terms {
                p.add_term(a, b, rat_int(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn axial_round_trip(p in arb_poly()) {
            prop_assert_eq!(p.to_axial().to_qqbar(), p);
        }

        #[test]
        fn axial_evaluation_agrees_exactly(p in arb_poly(), q0n in -5i64..6, rn in -5i64..6) {
            // Exact rational evaluation of both representations at q0 + w r.
            let q0 = rat(q0n, 3);
            let r = rat(rn, 2);
            let (re1, im1) = p.eval_exact(&q0, &r);
            let (re2, im2) = p.to_axial().eval_exact(&q0, &r);
            prop_assert_eq!(re1, re2);
            prop_assert_eq!(im1, im2);
        }

        #[test]
        fn delta_commutes_both_orders(p in arb_poly()) {
            let ax = p.to_axial();
            let ddbar = apply_operator_sym(FueterOp::D, &apply_operator_sym(FueterOp::Dbar, &ax));
            let dbard = apply_operator_sym(FueterOp::Dbar, &apply_operator_sym(FueterOp::D, &ax));
            prop_assert_eq!(&ddbar, &dbard);
            prop_assert_eq!(&ddbar, &apply_operator_sym(FueterOp::Delta, &ax));
        }
    }
}
