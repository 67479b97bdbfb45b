//! Quaternionic slice analysis toolkit.
//!
//! Builds the chain from holomorphic stem functions through slice
//! hyperholomorphic functions to axially monogenic and order-2 axially
//! polyanalytic functions, with every step realized three ways where the
//! theory allows it: exact symbolic identities on `(q, qbar)` polynomials,
//! pointwise kernel/contour evaluation, and an S-spectrum functional
//! calculus for commuting matrix quadruples.

pub mod contour;
pub mod error;
pub mod finite_diff;
pub mod kernel;
pub mod opcalc;
pub mod quaternion;
pub mod slice_function;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
pub use quaternion::{ImaginaryUnit, Quaternion, SlicePoint};

/// Left/right chirality; selects which side quaternion coefficients,
/// imaginary units, and kernel factors multiply on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}
