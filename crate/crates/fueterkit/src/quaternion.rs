//! Quaternion arithmetic and slice geometry.
//!
//! The algebra `H` with units `e1, e2, e3` (`e1*e2 = e3` and cyclic), the
//! sphere `S` of purely imaginary units, and the slice decomposition
//! `q = u + J*v` with `u = Re(q)`, `v = |Im(q)|`, `J = Im(q)/|Im(q)|`.
//! Two quaternions lie on the same sphere `[q]` iff they share `(u, v)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A quaternion `w + x e1 + y e2 + z e3` with double-precision components.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
pub const E1: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
pub const E2: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
pub const E3: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn from_real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// Real part `q0`.
    pub fn re(&self) -> f64 {
        self.w
    }

    /// Imaginary part `x e1 + y e2 + z e3` as a quaternion.
    pub fn imag(&self) -> Self {
        Self::new(0.0, self.x, self.y, self.z)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Modulus of the imaginary part, the `v` of the slice form `u + J v`.
    pub fn imag_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.w == 0.0 && self.x == 0.0 && self.y == 0.0 && self.z == 0.0
    }

    /// Multiplicative inverse `conj(q) / |q|^2`.
    pub fn inv(&self) -> Result<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj() / n2)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn powu(&self, mut n: u32) -> Self {
        let mut base = *self;
        let mut acc = ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            n >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents require an invertible base.
    pub fn powi(&self, n: i32) -> Result<Self> {
        if n >= 0 {
            Ok(self.powu(n as u32))
        } else {
            Ok(self.inv()?.powu(n.unsigned_abs()))
        }
    }

    /// The `(u, v)` parameters of the sphere `[q]`.
    pub fn sphere_params(&self) -> (f64, f64) {
        (self.w, self.imag_norm())
    }

    /// Default sphere-membership tolerance, scaled by the point magnitude.
    pub fn sphere_eps(&self) -> f64 {
        1e-10 * (1.0 + self.norm())
    }

    /// True iff `self` and `p` lie on the same sphere `[q]` within `eps`.
    pub fn same_sphere_with(&self, p: &Quaternion, eps: f64) -> bool {
        let (u1, v1) = self.sphere_params();
        let (u2, v2) = p.sphere_params();
        (u1 - u2).abs() <= eps && (v1 - v2).abs() <= eps
    }

    /// Sphere test with the default tolerance `1e-10 * (1 + |self|)`.
    pub fn same_sphere(&self, p: &Quaternion) -> bool {
        self.same_sphere_with(p, self.sphere_eps())
    }

    /// Split into slice coordinates; real points carry no imaginary unit.
    pub fn slice_decompose(&self) -> SlicePoint {
        let v = self.imag_norm();
        if v == 0.0 {
            SlicePoint {
                u: self.w,
                v: 0.0,
                j: None,
            }
        } else {
            let j = ImaginaryUnit(Quaternion::new(0.0, self.x / v, self.y / v, self.z / v));
            SlicePoint {
                u: self.w,
                v,
                j: Some(j),
            }
        }
    }

    /// Parse the text form `w+x i+y j+z k`; units `i/j/k` and `e1/e2/e3`
    /// are accepted, whitespace is ignored, and omitted terms default to 0.
    pub fn parse(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::InvalidInput("empty quaternion literal".into()));
        }
        let mut q = ZERO;
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let sign = match bytes[pos] {
                b'+' => {
                    pos += 1;
                    1.0
                }
                b'-' => {
                    pos += 1;
                    -1.0
                }
                _ => 1.0,
            };
            let start = pos;
            while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.') {
                pos += 1;
            }
            // Exponent part like 1.5e-3: an 'e' after mantissa digits,
            // followed by a digit or sign+digit (bare "e2" is the unit e2).
            if pos > start && pos < bytes.len() && (bytes[pos] == b'e' || bytes[pos] == b'E') {
                let mut look = pos + 1;
                if look < bytes.len() && (bytes[look] == b'+' || bytes[look] == b'-') {
                    look += 1;
                }
                if look < bytes.len() && bytes[look].is_ascii_digit() {
                    pos = look;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                }
            }
            let num_str = &compact[start..pos];
            let unit = if pos < bytes.len() {
                match bytes[pos] {
                    b'i' => {
                        pos += 1;
                        Some(1)
                    }
                    b'j' => {
                        pos += 1;
                        Some(2)
                    }
                    b'k' => {
                        pos += 1;
                        Some(3)
                    }
                    b'e' if pos + 1 < bytes.len() && (b'1'..=b'3').contains(&bytes[pos + 1]) => {
                        let axis = (bytes[pos + 1] - b'0') as usize;
                        pos += 2;
                        Some(axis)
                    }
                    _ => None,
                }
            } else {
                None
            };
            let coeff = if num_str.is_empty() {
                if unit.is_none() {
                    return Err(Error::InvalidInput(format!(
                        "cannot parse quaternion '{text}'"
                    )));
                }
                1.0
            } else {
                num_str.parse::<f64>().map_err(|_| {
                    Error::InvalidInput(format!("bad number '{num_str}' in '{text}'"))
                })?
            };
            match unit {
                None => q.w += sign * coeff,
                Some(1) => q.x += sign * coeff,
                Some(2) => q.y += sign * coeff,
                Some(3) => q.z += sign * coeff,
                Some(_) => unreachable!(),
            }
        }
        Ok(q)
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    pub fn from_array(a: [f64; 4]) -> Self {
        Self::new(a[0], a[1], a[2], a[3])
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn signed(f: &mut fmt::Formatter<'_>, c: f64, unit: &str) -> fmt::Result {
            if c < 0.0 || (c == 0.0 && c.is_sign_negative()) {
                write!(f, "-{} {}", -c, unit)
            } else {
                write!(f, "+{} {}", c, unit)
            }
        }
        write!(f, "{}", self.w)?;
        signed(f, self.x, "i")?;
        signed(f, self.y, "j")?;
        signed(f, self.z, "k")
    }
}

impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<f64>::deserialize(deserializer)?;
        if v.len() != 4 {
            return Err(D::Error::custom(
                "quaternion JSON form must be [w, x, y, z]",
            ));
        }
        Ok(Quaternion::new(v[0], v[1], v[2], v[3]))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, rhs: Quaternion) {
        *self = *self + rhs;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, rhs: Quaternion) {
        *self = *self - rhs;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: f64) -> Quaternion {
        Quaternion::new(self.w * r, self.x * r, self.y * r, self.z * r)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        r * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, r: f64) -> Quaternion {
        Quaternion::new(self.w / r, self.x / r, self.y / r, self.z / r)
    }
}

/// A unit purely imaginary quaternion `J` (so `J^2 = -1`), an element of
/// the sphere `S`; spans the complex plane `C_J` together with 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ImaginaryUnit(Quaternion);

pub const JE1: ImaginaryUnit = ImaginaryUnit(E1);
pub const JE2: ImaginaryUnit = ImaginaryUnit(E2);
pub const JE3: ImaginaryUnit = ImaginaryUnit(E3);

impl ImaginaryUnit {
    /// Normalizes the imaginary part of a direction into a unit; rejects
    /// inputs with a real component or a vanishing imaginary part.
    pub fn new(q: Quaternion) -> Result<Self> {
        let v = q.imag_norm();
        if v == 0.0 {
            return Err(Error::DivisionByZero);
        }
        if q.w.abs() > 1e-12 * (1.0 + q.norm()) {
            return Err(Error::InvalidInput(format!(
                "imaginary unit must be purely imaginary, got real part {}",
                q.w
            )));
        }
        Ok(Self(Quaternion::new(0.0, q.x / v, q.y / v, q.z / v)))
    }

    pub fn from_components(x: f64, y: f64, z: f64) -> Result<Self> {
        Self::new(Quaternion::new(0.0, x, y, z))
    }

    pub fn as_quaternion(&self) -> Quaternion {
        self.0
    }

    /// The point `u + J v` of the plane `C_J`.
    pub fn embed(&self, u: f64, v: f64) -> Quaternion {
        Quaternion::new(u, v * self.0.x, v * self.0.y, v * self.0.z)
    }
}

impl From<ImaginaryUnit> for Quaternion {
    fn from(j: ImaginaryUnit) -> Quaternion {
        j.0
    }
}

/// Slice coordinates of a quaternion: `q = u + J v` with `v >= 0`.
/// Real points (`v = 0`) genuinely have no imaginary unit, so `j` is `None`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlicePoint {
    pub u: f64,
    pub v: f64,
    pub j: Option<ImaginaryUnit>,
}

impl SlicePoint {
    pub fn compose(&self) -> Quaternion {
        match self.j {
            Some(j) => j.embed(self.u, self.v),
            None => Quaternion::from_real(self.u),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn approx(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn unit_table() {
        assert_eq!(E1 * E2, E3);
        assert_eq!(E2 * E3, E1);
        assert_eq!(E3 * E1, E2);
        assert_eq!(E2 * E1, -E3);
        assert_eq!(E1 * E1, -ONE);
        assert_eq!(E2 * E2, -ONE);
        assert_eq!(E3 * E3, -ONE);
    }

    #[test]
    fn identity_and_squares() {
        let q = Quaternion::new(1.0, 2.0, -0.5, 0.25);
        assert_eq!(q * ONE, q);
        assert_eq!(ONE * q, q);
        // (1+e1)^2 = 2 e1
        let p = ONE + E1;
        assert_eq!(p * p, 2.0 * E1);
    }

    #[test]
    fn inverses() {
        assert_eq!(
            Quaternion::from_real(2.0).inv().unwrap(),
            Quaternion::from_real(0.5)
        );
        assert_eq!(E1.inv().unwrap(), -E1);
        let p = ONE + E1;
        assert_eq!(p.inv().unwrap(), (ONE - E1) / 2.0);
        assert_eq!(ZERO.inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn slice_decomposition() {
        let q = Quaternion::new(1.0, 2.0, 2.0, 1.0);
        let sp = q.slice_decompose();
        assert_eq!(sp.u, 1.0);
        assert_eq!(sp.v, 3.0);
        let j = sp.j.unwrap().as_quaternion();
        assert!(approx(j, Quaternion::new(0.0, 2.0, 2.0, 1.0) / 3.0, 1e-15));

        let real = Quaternion::from_real(5.0);
        let sp = real.slice_decompose();
        assert_eq!((sp.u, sp.v), (5.0, 0.0));
        assert!(sp.j.is_none());

        let sp = E2.slice_decompose();
        assert_eq!((sp.u, sp.v), (0.0, 1.0));
        assert_eq!(sp.j.unwrap().as_quaternion(), E2);
    }

    #[test]
    fn sphere_membership() {
        assert!(E1.same_sphere(&E2));
        assert!((ONE + E1).same_sphere(&(ONE - E1)));
        assert!(!Quaternion::from_real(1.0).same_sphere(&Quaternion::from_real(2.0)));
    }

    #[test]
    fn parse_text_forms() {
        assert_eq!(Quaternion::parse("2").unwrap(), Quaternion::from_real(2.0));
        assert_eq!(
            Quaternion::parse("1+2i+3j+4k").unwrap(),
            Quaternion::new(1.0, 2.0, 3.0, 4.0)
        );
        assert_eq!(
            Quaternion::parse("0.5-2 k").unwrap(),
            Quaternion::new(0.5, 0.0, 0.0, -2.0)
        );
        assert_eq!(Quaternion::parse("-i").unwrap(), -E1);
        assert_eq!(Quaternion::parse("e2").unwrap(), E2);
        assert_eq!(Quaternion::parse("1+1 i+0 j+0 k").unwrap(), ONE + E1);
        assert_eq!(
            Quaternion::parse("1.5e-3").unwrap(),
            Quaternion::from_real(1.5e-3)
        );
        assert!(Quaternion::parse("fish").is_err());
    }

    #[test]
    fn display_round_trips_through_parse() {
        let q = Quaternion::new(1.0, -2.0, 0.0, 0.25);
        assert_eq!(Quaternion::parse(&q.to_string()).unwrap(), q);
    }

    fn arb_quat() -> impl Strategy<Value = Quaternion> {
        let c = -4.0..4.0f64;
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    proptest! {
        #[test]
        fn mul_is_associative(a in arb_quat(), b in arb_quat(), c in arb_quat()) {
            let lhs = (a * b) * c;
            let rhs = a * (b * c);
            let scale = 1.0 + a.norm() * b.norm() * c.norm();
            prop_assert!((lhs - rhs).norm() <= 1e-14 * scale);
        }

        #[test]
        fn norm_is_multiplicative(a in arb_quat(), b in arb_quat()) {
            let lhs = (a * b).norm();
            let rhs = a.norm() * b.norm();
            prop_assert!((lhs - rhs).abs() <= 1e-14 * (1.0 + rhs));
        }

        #[test]
        fn conj_is_anti_automorphism(a in arb_quat(), b in arb_quat()) {
            // Exact on dyadic-rational inputs; strategy values are such.
            let lhs = (a * b).conj();
            let rhs = b.conj() * a.conj();
            prop_assert!((lhs - rhs).norm() <= 1e-13 * (1.0 + a.norm() * b.norm()));
        }

        #[test]
        fn slice_round_trip(q in arb_quat()) {
            let back = q.slice_decompose().compose();
            prop_assert!((back - q).norm() <= 1e-15 * (1.0 + q.norm()));
        }

        #[test]
        fn decomposed_unit_squares_to_minus_one(q in arb_quat()) {
            if let Some(j) = q.slice_decompose().j {
                let jj = j.as_quaternion() * j.as_quaternion();
                prop_assert!((jj + ONE).norm() <= 1e-14);
            }
        }
    }
}
