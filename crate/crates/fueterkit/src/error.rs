//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by zero quaternion")]
    DivisionByZero,

    #[error("axial parts violate the even/odd parity required of an axial polynomial")]
    NotAxiallySymmetric,

    #[error("degree {0} is outside the valid range for this polynomial family")]
    BadDegree(i64),

    #[error("input is not annihilated by the square of the Fueter operator")]
    NotPolyanalytic2,

    #[error("stem function is not real on the real axis (|beta| = {beta})")]
    StemNotReal { beta: f64 },

    #[error("evaluation point lies outside the function domain")]
    OutsideDomain,

    #[error("point lies outside the convergence radius of the series")]
    DivergentSeries,

    #[error("s lies on the sphere [q]; kernel is singular there")]
    OnSpectrumSphere,

    #[error("|q| >= |s|: the kernel series does not converge")]
    NotInDisk,

    #[error("point is within the safety margin of the contour boundary")]
    PointOnBoundary,

    #[error("the target sphere grazes the contour boundary")]
    SphereHitsBoundary,

    #[error("pencil P^2 + R^2 is numerically singular: s lies on the S-spectrum")]
    SingularPencil,

    #[error("operator components do not commute within tolerance (max relative residual {residual:.3e})")]
    NonCommuting { residual: f64 },

    #[error("the S-spectrum is not enclosed by the integration contour")]
    SpectrumNotEnclosed,

    #[error("operator norm bound {norm} is not below |s| = {s_abs}; series diverges")]
    NormTooLarge { norm: f64, s_abs: f64 },

    #[error("radial coordinate must be positive, got {0}")]
    NonPositiveRadius(f64),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
