//! Functional calculi on the S-spectrum for commuting matrix quadruples.
//!
//! Operators are quadruples `T = T0 + e1 T1 + e2 T2 + e3 T3` of commuting
//! real `d x d` matrices. The commutative pseudo-resolvent
//! `Qcs(T) = s^2 - 2 T0 s + T Tbar` drives everything: its non-invertibility
//! points form the S-spectrum, and the S-, F- and order-2 polyanalytic
//! resolvents are built from its inverse in the same factor order as the
//! pointwise kernels. The three calculi integrate those resolvents against
//! boundary values of a slice hyperholomorphic function.

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::contour::SliceContour;
use crate::error::{Error, Result};
use crate::kernel::{dbar_series_terms, KernelKind};
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::slice_function::SliceFunction;
use crate::Side;

/// Default commutation tolerance: pairs must satisfy
/// `|Ti Tj - Tj Ti| <= eps * |Ti| |Tj|` in the Frobenius norm.
pub const EPS_COMM: f64 = 1e-10;

/// Residual threshold on `Q Q^-1 - I` beyond which `s` is treated as
/// numerically on the spectrum.
pub const QCS_RESIDUAL_TOL: f64 = 1e-10;

// ---------------------------------------------------------------------------
// Quaternion-valued matrices
// ---------------------------------------------------------------------------

/// A quaternion-valued matrix `M0 + e1 M1 + e2 M2 + e3 M3` with real parts.
/// The units commute with real matrices, so products follow the quaternion
/// component rules with matrix factors kept in order.
#[derive(Clone, Debug, PartialEq)]
pub struct QuaternionMatrix {
    pub m: [DMatrix<f64>; 4],
}

impl QuaternionMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            m: std::array::from_fn(|_| DMatrix::zeros(dim, dim)),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut qm = Self::zeros(dim);
        qm.m[0] = DMatrix::identity(dim, dim);
        qm
    }

    pub fn from_real(m0: DMatrix<f64>) -> Self {
        let dim = m0.nrows();
        let mut qm = Self::zeros(dim);
        qm.m[0] = m0;
        qm
    }

    /// The scalar matrix `q I`.
    pub fn from_quaternion(q: Quaternion, dim: usize) -> Self {
        let id = DMatrix::<f64>::identity(dim, dim);
        Self {
            m: [&id * q.w, &id * q.x, &id * q.y, &id * q.z],
        }
    }

    pub fn dim(&self) -> usize {
        self.m[0].nrows()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            m: std::array::from_fn(|i| &self.m[i] + &other.m[i]),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            m: std::array::from_fn(|i| &self.m[i] - &other.m[i]),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            m: std::array::from_fn(|i| -&self.m[i]),
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            m: std::array::from_fn(|i| &self.m[i] * c),
        }
    }

    /// Full quaternion-matrix product; factor order is preserved component
    /// by component.
    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        Self {
            m: [
                &a[0] * &b[0] - &a[1] * &b[1] - &a[2] * &b[2] - &a[3] * &b[3],
                &a[0] * &b[1] + &a[1] * &b[0] + &a[2] * &b[3] - &a[3] * &b[2],
                &a[0] * &b[2] - &a[1] * &b[3] + &a[2] * &b[0] + &a[3] * &b[1],
                &a[0] * &b[3] + &a[1] * &b[2] - &a[2] * &b[1] + &a[3] * &b[0],
            ],
        }
    }

    /// Right multiplication by a quaternion scalar.
    pub fn mul_quat_right(&self, q: Quaternion) -> Self {
        let a = &self.m;
        let (b0, b1, b2, b3) = (q.w, q.x, q.y, q.z);
        Self {
            m: [
                &a[0] * b0 - &a[1] * b1 - &a[2] * b2 - &a[3] * b3,
                &a[0] * b1 + &a[1] * b0 + &a[2] * b3 - &a[3] * b2,
                &a[0] * b2 - &a[1] * b3 + &a[2] * b0 + &a[3] * b1,
                &a[0] * b3 + &a[1] * b2 - &a[2] * b1 + &a[3] * b0,
            ],
        }
    }

    /// Left multiplication by a quaternion scalar.
    pub fn mul_quat_left(&self, q: Quaternion) -> Self {
        let b = &self.m;
        let (a0, a1, a2, a3) = (q.w, q.x, q.y, q.z);
        Self {
            m: [
                &b[0] * a0 - &b[1] * a1 - &b[2] * a2 - &b[3] * a3,
                &b[1] * a0 + &b[0] * a1 + &b[3] * a2 - &b[2] * a3,
                &b[2] * a0 - &b[3] * a1 + &b[0] * a2 + &b[1] * a3,
                &b[3] * a0 + &b[2] * a1 - &b[1] * a2 + &b[0] * a3,
            ],
        }
    }

    /// Left multiplication by a real matrix.
    pub fn mul_real_left(&self, p: &DMatrix<f64>) -> Self {
        Self {
            m: std::array::from_fn(|i| p * &self.m[i]),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.dim());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m.iter().map(|m| m.norm_squared()).sum::<f64>().sqrt()
    }

    /// Quaternion at diagonal entry `(i, i)`; the pointwise value on a
    /// diagonal lift.
    pub fn diagonal_entry(&self, i: usize) -> Quaternion {
        Quaternion::new(
            self.m[0][(i, i)],
            self.m[1][(i, i)],
            self.m[2][(i, i)],
            self.m[3][(i, i)],
        )
    }

    /// List `[I, M, M^2, .., M^n]`.
    pub fn power_table(&self, n: usize) -> Vec<Self> {
        let mut v = Vec::with_capacity(n + 1);
        v.push(Self::identity(self.dim()));
        for i in 1..=n {
            let next = v[i - 1].mul(self);
            v.push(next);
        }
        v
    }
}

// ---------------------------------------------------------------------------
// Commuting operator quadruples
// ---------------------------------------------------------------------------

/// A quadruple of commuting real `d x d` matrices, the finite-dimensional
/// operators the calculi act on. Commutation is validated at construction
/// and never repaired.
#[derive(Clone, Debug)]
pub struct CommutingOperator {
    t: [DMatrix<f64>; 4],
}

impl CommutingOperator {
    pub fn new(
        t0: DMatrix<f64>,
        t1: DMatrix<f64>,
        t2: DMatrix<f64>,
        t3: DMatrix<f64>,
    ) -> Result<Self> {
        Self::with_eps(t0, t1, t2, t3, EPS_COMM)
    }

    pub fn with_eps(
        t0: DMatrix<f64>,
        t1: DMatrix<f64>,
        t2: DMatrix<f64>,
        t3: DMatrix<f64>,
        eps: f64,
    ) -> Result<Self> {
        let t = [t0, t1, t2, t3];
        let d = t[0].nrows();
        for ti in &t {
            if ti.nrows() != d || ti.ncols() != d {
                return Err(Error::InvalidInput(
                    "components must be square matrices of one size".into(),
                ));
            }
        }
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in i + 1..4 {
                let comm = (&t[i] * &t[j] - &t[j] * &t[i]).norm();
                let bound = t[i].norm() * t[j].norm();
                if comm > eps * bound {
                    worst = worst.max(if bound > 0.0 {
                        comm / bound
                    } else {
                        f64::INFINITY
                    });
                }
            }
        }
        if worst > 0.0 {
            return Err(Error::NonCommuting { residual: worst });
        }
        Ok(Self { t })
    }

    pub fn dim(&self) -> usize {
        self.t[0].nrows()
    }

    pub fn component(&self, i: usize) -> &DMatrix<f64> {
        &self.t[i]
    }

    pub fn t0(&self) -> &DMatrix<f64> {
        &self.t[0]
    }

    /// `T` as a quaternion matrix.
    pub fn as_matrix(&self) -> QuaternionMatrix {
        QuaternionMatrix { m: self.t.clone() }
    }

    /// `Tbar = T0 - e1 T1 - e2 T2 - e3 T3`.
    pub fn conj_matrix(&self) -> QuaternionMatrix {
        QuaternionMatrix {
            m: [self.t[0].clone(), -&self.t[1], -&self.t[2], -&self.t[3]],
        }
    }

    /// `T Tbar = T0^2 + T1^2 + T2^2 + T3^2`, a real matrix.
    pub fn t_tbar(&self) -> DMatrix<f64> {
        let mut acc = &self.t[0] * &self.t[0];
        for i in 1..4 {
            acc += &self.t[i] * &self.t[i];
        }
        acc
    }

    /// Certified upper bound on the operator norm of `T`: the spectral norm
    /// of the real `4d x 4d` left-multiplication representation.
    pub fn norm_upper_bound(&self) -> f64 {
        let d = self.dim();
        // Component block signs of left multiplication by T.
        const LAYOUT: [[(usize, f64); 4]; 4] = [
            [(0, 1.0), (1, -1.0), (2, -1.0), (3, -1.0)],
            [(1, 1.0), (0, 1.0), (3, -1.0), (2, 1.0)],
            [(2, 1.0), (3, 1.0), (0, 1.0), (1, -1.0)],
            [(3, 1.0), (2, -1.0), (1, 1.0), (0, 1.0)],
        ];
        let mut rep = DMatrix::<f64>::zeros(4 * d, 4 * d);
        for (bi, row) in LAYOUT.iter().enumerate() {
            for (bj, &(comp, sign)) in row.iter().enumerate() {
                rep.view_mut((bi * d, bj * d), (d, d))
                    .copy_from(&(&self.t[comp] * sign));
            }
        }
        rep.singular_values().iter().fold(0.0f64, |a, &s| a.max(s))
    }

    /// Scale all components by `c` (scales `T` and its norm bound by `|c|`).
    pub fn scaled(&self, c: f64) -> Self {
        Self {
            t: std::array::from_fn(|i| &self.t[i] * c),
        }
    }

    /// Block-diagonal lift of quaternion points: component `i` of point `k`
    /// becomes the `(k, k)` entry of `Ti`. Diagonal components always
    /// commute.
    pub fn diagonal_lift(points: &[Quaternion]) -> Self {
        let d = points.len();
        let mut t: [DMatrix<f64>; 4] = std::array::from_fn(|_| DMatrix::zeros(d, d));
        for (k, q) in points.iter().enumerate() {
            let c = q.to_array();
            for i in 0..4 {
                t[i][(k, k)] = c[i];
            }
        }
        Self { t }
    }

    /// Random commuting quadruple: components are quadratic polynomials in
    /// one random matrix, which forces commutation structurally.
    pub fn random_commuting<R: Rng>(dim: usize, rng: &mut R) -> Self {
        let mut m = DMatrix::<f64>::zeros(dim, dim);
        for v in m.iter_mut() {
            *v = rng.random_range(-1.0..1.0);
        }
        let norm = m.norm().max(1e-12);
        m /= norm;
        let m2 = &m * &m;
        let id = DMatrix::<f64>::identity(dim, dim);
        let t = std::array::from_fn(|_| {
            let c0: f64 = rng.random_range(-1.0..1.0);
            let c1: f64 = rng.random_range(-1.0..1.0);
            let c2: f64 = rng.random_range(-1.0..1.0);
            &id * c0 + &m * c1 + &m2 * c2
        });
        Self { t }
    }
}

// ---------------------------------------------------------------------------
// JSON forms
// ---------------------------------------------------------------------------

/// Operator JSON schema `{"dim": d, "T0": [[..]], .., "T3": [[..]]}`.
#[derive(Serialize, Deserialize)]
pub struct OperatorJson {
    pub dim: usize,
    #[serde(rename = "T0")]
    pub t0: Vec<Vec<f64>>,
    #[serde(rename = "T1")]
    pub t1: Vec<Vec<f64>>,
    #[serde(rename = "T2")]
    pub t2: Vec<Vec<f64>>,
    #[serde(rename = "T3")]
    pub t3: Vec<Vec<f64>>,
}

fn rows_to_matrix(rows: &[Vec<f64>], dim: usize, name: &str) -> Result<DMatrix<f64>> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(Error::InvalidInput(format!(
            "{name} must be a {dim} x {dim} matrix"
        )));
    }
    Ok(DMatrix::from_fn(dim, dim, |r, c| rows[r][c]))
}

fn matrix_to_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| m[(r, c)]).collect())
        .collect()
}

impl OperatorJson {
    pub fn to_operator(&self) -> Result<CommutingOperator> {
        CommutingOperator::new(
            rows_to_matrix(&self.t0, self.dim, "T0")?,
            rows_to_matrix(&self.t1, self.dim, "T1")?,
            rows_to_matrix(&self.t2, self.dim, "T2")?,
            rows_to_matrix(&self.t3, self.dim, "T3")?,
        )
    }
}

/// Calculus output schema `{"M0": [[..]], .., "M3": [[..]]}`.
#[derive(Serialize, Deserialize)]
pub struct QuaternionMatrixJson {
    #[serde(rename = "M0")]
    pub m0: Vec<Vec<f64>>,
    #[serde(rename = "M1")]
    pub m1: Vec<Vec<f64>>,
    #[serde(rename = "M2")]
    pub m2: Vec<Vec<f64>>,
    #[serde(rename = "M3")]
    pub m3: Vec<Vec<f64>>,
}

impl From<&QuaternionMatrix> for QuaternionMatrixJson {
    fn from(qm: &QuaternionMatrix) -> Self {
        Self {
            m0: matrix_to_rows(&qm.m[0]),
            m1: matrix_to_rows(&qm.m[1]),
            m2: matrix_to_rows(&qm.m[2]),
            m3: matrix_to_rows(&qm.m[3]),
        }
    }
}

// ---------------------------------------------------------------------------
// S-spectrum
// ---------------------------------------------------------------------------

/// One sphere `u + S v` of the S-spectrum with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralSphere {
    pub u: f64,
    pub v: f64,
    pub multiplicity: usize,
}

/// The commutative S-spectrum as a list of spheres, sorted by `(u, v)`.
#[derive(Clone, Debug, Default)]
pub struct SSpectrum {
    pub spheres: Vec<SpectralSphere>,
}

impl SSpectrum {
    pub fn max_radius(&self) -> f64 {
        self.spheres
            .iter()
            .map(|s| s.u.hypot(s.v))
            .fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,v,multiplicity\n");
        for s in &self.spheres {
            out.push_str(&format!("{},{},{}\n", s.u, s.v, s.multiplicity));
        }
        out
    }
}

/// S-spectrum via companion linearization of the real quadratic pencil
/// `z^2 I - 2 z T0 + T Tbar`: complex eigenvalues of
/// `[[0, I], [-T Tbar, 2 T0]]`, folded to `v >= 0` and merged into spheres.
/// Each sphere accounts for an eigenvalue pair (a conjugate pair, or a
/// doubled real root), so multiplicities sum to `d`.
pub fn s_spectrum(t: &CommutingOperator) -> SSpectrum {
    let d = t.dim();
    let mut companion = DMatrix::<f64>::zeros(2 * d, 2 * d);
    companion
        .view_mut((0, d), (d, d))
        .copy_from(&DMatrix::identity(d, d));
    companion.view_mut((d, 0), (d, d)).copy_from(&(-t.t_tbar()));
    companion
        .view_mut((d, d), (d, d))
        .copy_from(&(t.t0() * 2.0));
    let eigs = companion.complex_eigenvalues();

    let mut points: Vec<(f64, f64)> = eigs.iter().map(|z| (z.re, z.im.abs())).collect();
    points.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));

    let mut spheres: Vec<SpectralSphere> = Vec::new();
    let mut cluster: Vec<(f64, f64)> = Vec::new();
    let flush = |cluster: &mut Vec<(f64, f64)>, spheres: &mut Vec<SpectralSphere>| {
        if cluster.is_empty() {
            return;
        }
        let n = cluster.len() as f64;
        let u = cluster.iter().map(|p| p.0).sum::<f64>() / n;
        let mut v = cluster.iter().map(|p| p.1).sum::<f64>() / n;
        // At the dedup resolution, spheres this thin are real points.
        if v < dedup_tol(u, v) {
            v = 0.0;
        }
        spheres.push(SpectralSphere {
            u,
            v,
            multiplicity: cluster.len().div_ceil(2),
        });
        cluster.clear();
    };
    for p in points {
        if let Some(&(u0, v0)) = cluster.first() {
            let tol = dedup_tol(u0, v0);
            if (p.0 - u0).abs() <= tol && (p.1 - v0).abs() <= tol {
                cluster.push(p);
                continue;
            }
            flush(&mut cluster, &mut spheres);
        }
        cluster.push(p);
    }
    flush(&mut cluster, &mut spheres);
    spheres.sort_by(|a, b| (a.u, a.v).partial_cmp(&(b.u, b.v)).expect("finite"));
    SSpectrum { spheres }
}

// Defective double roots (real points of diagonal lifts) come back from QR
// split by ~sqrt(eps) * |z|; 1e-8 under-merges them, 2e-7 restores the pair.
fn dedup_tol(u: f64, v: f64) -> f64 {
    2e-7 * (1.0 + u.hypot(v))
}

// ---------------------------------------------------------------------------
// Pseudo-resolvent and resolvents
// ---------------------------------------------------------------------------

/// Inverse of `Qcs(T) = s^2 - 2 T0 s + T Tbar`. With `s = u + Jv` the
/// pencil splits as `P + J R` with commuting real parts
/// `P = (u^2 - v^2) I - 2u T0 + T Tbar`, `R = 2v (u I - T0)`, so
/// `Q^-1 = (P - J R)(P^2 + R^2)^-1` costs one real inversion.
pub fn qcs_op_inverse(s: Quaternion, t: &CommutingOperator) -> Result<QuaternionMatrix> {
    let d = t.dim();
    let sp = s.slice_decompose();
    let (u, v) = (sp.u, sp.v);
    let id = DMatrix::<f64>::identity(d, d);
    let p = &id * (u * u - v * v) - t.t0() * (2.0 * u) + t.t_tbar();
    let r = (&id * u - t.t0()) * (2.0 * v);
    let denom = &p * &p + &r * &r;
    let denom_inv = denom.try_inverse().ok_or(Error::SingularPencil)?;
    let px = &p * &denom_inv;

    let (q_full, inv) = match sp.j {
        Some(j) => {
            let rx = &r * &denom_inv;
            let jq = j.as_quaternion();
            let jc = [jq.x, jq.y, jq.z];
            let mut inv = QuaternionMatrix::from_real(px);
            let mut q = QuaternionMatrix::from_real(p);
            for (i, &jci) in jc.iter().enumerate() {
                inv.m[i + 1] = &rx * (-jci);
                q.m[i + 1] = &r * jci;
            }
            (q, inv)
        }
        None => (
            QuaternionMatrix::from_real(p),
            QuaternionMatrix::from_real(px),
        ),
    };
    let residual = q_full
        .mul(&inv)
        .sub(&QuaternionMatrix::identity(d))
        .frobenius_norm();
    if residual > QCS_RESIDUAL_TOL {
        return Err(Error::SingularPencil);
    }
    Ok(inv)
}

/// S-, F-, or order-2 polyanalytic resolvent at `s`:
///
/// ```text
/// SL  = (sI - Tbar) Q^-1            SR  = Q^-1 (sI - Tbar)
/// FL  = -4 (sI - Tbar) Q^-2         FR  = -4 Q^-2 (sI - Tbar)
/// P2L = -FL s + T0 FL               P2R = -s FR + FR T0
/// ```
pub fn resolvent_eval(
    kind: KernelKind,
    s: Quaternion,
    t: &CommutingOperator,
) -> Result<QuaternionMatrix> {
    let d = t.dim();
    let q_inv = qcs_op_inverse(s, t)?;
    let s_minus_tbar = QuaternionMatrix::from_quaternion(s, d).sub(&t.conj_matrix());
    match kind {
        KernelKind::SL => Ok(s_minus_tbar.mul(&q_inv)),
        KernelKind::SR => Ok(q_inv.mul(&s_minus_tbar)),
        KernelKind::FL => Ok(s_minus_tbar.mul(&q_inv.mul(&q_inv)).scale(-4.0)),
        KernelKind::FR => Ok(q_inv.mul(&q_inv).mul(&s_minus_tbar).scale(-4.0)),
        KernelKind::P2L => {
            let fl = s_minus_tbar.mul(&q_inv.mul(&q_inv)).scale(-4.0);
            Ok(fl.mul_quat_right(s).neg().add(&fl.mul_real_left(t.t0())))
        }
        KernelKind::P2R => {
            let fr = q_inv.mul(&q_inv).mul(&s_minus_tbar).scale(-4.0);
            Ok(fr
                .mul_quat_left(s)
                .neg()
                .add(&fr.mul(&QuaternionMatrix::from_real(t.t0().clone()))))
        }
    }
}

// ---------------------------------------------------------------------------
// Functional calculi
// ---------------------------------------------------------------------------

/// Which functional calculus to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Calculus {
    S,
    F,
    P2,
}

impl Calculus {
    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_uppercase().as_str() {
            "S" => Ok(Self::S),
            "F" => Ok(Self::F),
            "P2" => Ok(Self::P2),
            other => Err(Error::InvalidInput(format!("unknown calculus '{other}'"))),
        }
    }

    fn kernel_kind(self, side: Side) -> KernelKind {
        match (self, side) {
            (Calculus::S, Side::Left) => KernelKind::SL,
            (Calculus::S, Side::Right) => KernelKind::SR,
            (Calculus::F, Side::Left) => KernelKind::FL,
            (Calculus::F, Side::Right) => KernelKind::FR,
            (Calculus::P2, Side::Left) => KernelKind::P2L,
            (Calculus::P2, Side::Right) => KernelKind::P2R,
        }
    }
}

/// Disk contour that encloses the S-spectrum with a safe separation:
/// radius `1.5 * max |z| + 0.5` about the origin.
pub fn default_contour(
    t: &CommutingOperator,
    j: ImaginaryUnit,
    nodes: usize,
) -> Result<SliceContour> {
    let radius = 1.5 * s_spectrum(t).max_radius() + 0.5;
    SliceContour::disk(j, 0.0, radius, nodes)
}

fn require_spectrum_enclosed(t: &CommutingOperator, contour: &SliceContour) -> Result<()> {
    for sphere in s_spectrum(t).spheres {
        contour.require_sphere_enclosed(sphere.u, sphere.v)?;
    }
    Ok(())
}

/// Functional calculus by contour quadrature:
/// `(1/2pi) \oint R(s, T) ds_J f(s)` for left-chirality `f` (intrinsic
/// functions use the left form), mirrored for right series. `R` is the
/// resolvent selected by `which`.
pub fn calculus_apply(
    which: Calculus,
    f: &SliceFunction,
    t: &CommutingOperator,
    contour: &SliceContour,
) -> Result<QuaternionMatrix> {
    require_spectrum_enclosed(t, contour)?;
    let d = t.dim();
    let kind = which.kernel_kind(f.side());
    let mut acc = QuaternionMatrix::zeros(d);
    contour.integrate(|s, w| {
        let resolvent = resolvent_eval(kind, s, t)?;
        let term = match f.side() {
            Side::Left => resolvent.mul_quat_right(w * f.eval(s)?),
            Side::Right => resolvent.mul_quat_left(f.eval(s)? * w),
        };
        acc = acc.add(&term);
        Ok(Quaternion::default())
    })?;
    Ok(acc)
}

/// Apply one calculus (left form) to all monomials `s^n`, `0 <= n <=
/// max_degree`, in a single quadrature pass; the per-node resolvent is
/// shared across degrees.
pub fn calculus_apply_monomials(
    which: Calculus,
    max_degree: u32,
    t: &CommutingOperator,
    contour: &SliceContour,
) -> Result<Vec<QuaternionMatrix>> {
    require_spectrum_enclosed(t, contour)?;
    let d = t.dim();
    let kind = which.kernel_kind(Side::Left);
    let mut acc = vec![QuaternionMatrix::zeros(d); max_degree as usize + 1];
    contour.integrate(|s, w| {
        let resolvent = resolvent_eval(kind, s, t)?;
        let mut s_pow = crate::quaternion::ONE;
        for out in acc.iter_mut() {
            *out = out.add(&resolvent.mul_quat_right(w * s_pow));
            s_pow = s_pow * s;
        }
        Ok(Quaternion::default())
    })?;
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Series oracles
// ---------------------------------------------------------------------------

/// Which operator power series to sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorSeries {
    /// Conjugate-Fueter kernel operator
    /// `2 sum_n (n T^(n-1) + sum_k T^(n-k) Tbar^(k-1)) s^(-1-n)`;
    /// `side` selects which resolvent it reproduces (`Left` -> `P2L`, with
    /// the `s` powers on the right; mirrored for `Right` -> `P2R`).
    DbarKernelOp,
    /// F-resolvent expansion
    /// `-4 sum_n sum_{k=1..n-1} (n-k) T^(n-k-1) Tbar^(k-1) s^(-1-n)`
    /// (`Left` -> `FL`; mirrored for `Right` -> `FR`).
    FResolventSeries,
}

fn series_norm_check(s: Quaternion, t: &CommutingOperator) -> Result<(f64, f64)> {
    let norm = t.norm_upper_bound();
    let s_abs = s.norm();
    if norm >= s_abs {
        return Err(Error::NormTooLarge { norm, s_abs });
    }
    Ok((norm / s_abs, s_abs))
}

/// Truncation length for the F-resolvent series from its majorant
/// `2 n (n-1) |T|^(n-2) |s|^(-1-n)`.
fn fres_series_terms(rho: f64, s_abs: f64, tol: f64) -> Result<usize> {
    if rho >= 1.0 || rho.is_nan() {
        return Err(Error::NotInDisk);
    }
    let tail = |n: usize| {
        let nf = n as f64;
        let one_minus = 1.0 - rho;
        2.0 / (s_abs * s_abs * s_abs)
            * (nf * (nf + 1.0) * rho.powi(n as i32 - 1) / one_minus
                + 2.0 * (nf + 1.0) * rho.powi(n as i32) / (one_minus * one_minus)
                + 2.0 * rho.powi(n as i32 + 1) / (one_minus * one_minus * one_minus))
    };
    let mut n = 2;
    while tail(n) > tol {
        n += 1;
        if n > 2_000_000 {
            return Err(Error::InvalidInput("series truncation too long".into()));
        }
    }
    Ok(n)
}

/// Truncated operator series with the truncation chosen so the analytic
/// tail bound is at most `tol`. Requires the certified norm bound
/// `|T| < |s|`. `DbarKernelOp` reproduces the order-2 polyanalytic
/// resolvents, `FResolventSeries` the F-resolvents.
pub fn series_oracle(
    which: OperatorSeries,
    side: Side,
    s: Quaternion,
    t: &CommutingOperator,
    tol: f64,
) -> Result<QuaternionMatrix> {
    let (rho, s_abs) = series_norm_check(s, t)?;
    let d = t.dim();
    let s_inv = s.inv()?;
    match which {
        OperatorSeries::DbarKernelOp => {
            let n_terms = dbar_series_terms(rho, s_abs, tol)?;
            let tp = t.as_matrix().power_table(n_terms);
            let tbp = t.conj_matrix().power_table(n_terms);
            let mut s_factor = s_inv * s_inv; // s^(-1-n) at n = 1
            let mut acc = QuaternionMatrix::zeros(d);
            for n in 1..=n_terms {
                let mut coeff = tp[n - 1].scale(n as f64);
                for k in 1..=n {
                    coeff = coeff.add(&tp[n - k].mul(&tbp[k - 1]));
                }
                coeff = coeff.scale(2.0);
                let term = match side {
                    Side::Left => coeff.mul_quat_right(s_factor),
                    Side::Right => coeff.mul_quat_left(s_factor),
                };
                acc = acc.add(&term);
                s_factor = s_factor * s_inv;
            }
            Ok(acc)
        }
        OperatorSeries::FResolventSeries => {
            let n_terms = fres_series_terms(rho, s_abs, tol)?;
            let tp = t.as_matrix().power_table(n_terms);
            let tbp = t.conj_matrix().power_table(n_terms);
            let mut s_factor = s_inv.powu(3); // s^(-1-n) at n = 2
            let mut acc = QuaternionMatrix::zeros(d);
            for n in 2..=n_terms {
                let mut coeff = QuaternionMatrix::zeros(d);
                for k in 1..n {
                    coeff = coeff.add(&tp[n - k - 1].mul(&tbp[k - 1]).scale((n - k) as f64));
                }
                coeff = coeff.scale(-4.0);
                let term = match side {
                    Side::Left => coeff.mul_quat_right(s_factor),
                    Side::Right => coeff.mul_quat_left(s_factor),
                };
                acc = acc.add(&term);
                s_factor = s_factor * s_inv;
            }
            Ok(acc)
        }
    }
}

/// Clifford-Appell polynomial of the operator pair,
/// `Q_l(T, Tbar) = 2/((l+1)(l+2)) sum_j (l-j+1) T^(l-j) Tbar^j`, from
/// precomputed power tables.
fn appell_matrix(
    ell: usize,
    tp: &[QuaternionMatrix],
    tbp: &[QuaternionMatrix],
    dim: usize,
) -> QuaternionMatrix {
    let scale = 2.0 / (((ell + 1) * (ell + 2)) as f64);
    let mut acc = QuaternionMatrix::zeros(dim);
    for j in 0..=ell {
        acc = acc.add(&tp[ell - j].mul(&tbp[j]).scale((ell - j + 1) as f64));
    }
    acc.scale(scale)
}

/// The conjugate-Fueter kernel operator resummed through Clifford-Appell
/// polynomials:
/// `2 sum_n n [(n+1) Q_(n-1)(T, Tbar) - T0 (n-1) Q_(n-2)(T, Tbar)] s^(-1-n)`;
/// equals [`series_oracle`] with [`OperatorSeries::DbarKernelOp`].
pub fn appell_operator_series(
    side: Side,
    s: Quaternion,
    t: &CommutingOperator,
    tol: f64,
) -> Result<QuaternionMatrix> {
    let (rho, s_abs) = series_norm_check(s, t)?;
    let d = t.dim();
    let n_terms = dbar_series_terms(rho, s_abs, tol)?;
    let s_inv = s.inv()?;
    let tp = t.as_matrix().power_table(n_terms);
    let tbp = t.conj_matrix().power_table(n_terms);
    let t0 = t.t0();
    let mut s_factor = s_inv * s_inv;
    let mut acc = QuaternionMatrix::zeros(d);
    for n in 1..=n_terms {
        let nf = n as f64;
        let mut coeff = appell_matrix(n - 1, &tp, &tbp, d).scale(2.0 * nf * (nf + 1.0));
        if n >= 2 {
            let second = appell_matrix(n - 2, &tp, &tbp, d)
                .mul_real_left(t0)
                .scale(-2.0 * nf * (nf - 1.0));
            coeff = coeff.add(&second);
        }
        let term = match side {
            Side::Left => coeff.mul_quat_right(s_factor),
            Side::Right => coeff.mul_quat_left(s_factor),
        };
        acc = acc.add(&term);
        s_factor = s_factor * s_inv;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Monomial oracles
// ---------------------------------------------------------------------------

/// S-calculus of `s^n` is `T^n`.
pub fn s_monomial_oracle(n: u32, t: &CommutingOperator) -> QuaternionMatrix {
    t.as_matrix().pow(n)
}

/// F-calculus of `s^n` is `-4 sum_{k=1..n-1} (n-k) T^(n-k-1) Tbar^(k-1)`
/// (zero for `n <= 1`): the coefficient of `s^(-1-n)` in the F-resolvent
/// expansion.
pub fn f_monomial_oracle(n: u32, t: &CommutingOperator) -> QuaternionMatrix {
    let d = t.dim();
    if n < 2 {
        return QuaternionMatrix::zeros(d);
    }
    let n = n as usize;
    let tp = t.as_matrix().power_table(n - 2);
    let tbp = t.conj_matrix().power_table(n - 2);
    let mut acc = QuaternionMatrix::zeros(d);
    for k in 1..n {
        acc = acc.add(&tp[n - k - 1].mul(&tbp[k - 1]).scale((n - k) as f64));
    }
    acc.scale(-4.0)
}

/// P2-calculus of `s^n` is `2 (n T^(n-1) + sum_{k=1..n} T^(n-k) Tbar^(k-1))`
/// (zero for `n = 0`): the coefficient in the conjugate-Fueter kernel
/// operator series.
pub fn p2_monomial_oracle(n: u32, t: &CommutingOperator) -> QuaternionMatrix {
    let d = t.dim();
    if n == 0 {
        return QuaternionMatrix::zeros(d);
    }
    let n = n as usize;
    let tp = t.as_matrix().power_table(n - 1);
    let tbp = t.conj_matrix().power_table(n - 1);
    let mut acc = tp[n - 1].scale(n as f64);
    for k in 1..=n {
        acc = acc.add(&tp[n - k].mul(&tbp[k - 1]));
    }
    acc.scale(2.0)
}

// ---------------------------------------------------------------------------
// Diagonal lift cross-check
// ---------------------------------------------------------------------------

/// Deviations between each calculus applied to a diagonal lift and the
/// matching pointwise operation at the lifted points.
#[derive(Clone, Debug)]
pub struct LiftCheckReport {
    pub s_deviation: f64,
    pub f_deviation: f64,
    pub p2_deviation: f64,
}

impl LiftCheckReport {
    pub fn max_deviation(&self) -> f64 {
        self.s_deviation
            .max(self.f_deviation)
            .max(self.p2_deviation)
    }
}

/// Lift quaternion points to a diagonal quadruple, run the three calculi,
/// and compare each diagonal block with the pointwise value: `f(q)` for S,
/// finite-difference `Delta f` for F, and finite-difference `Dbar f` for P2.
/// Deviations are relative to `1 + |expected|`.
pub fn diagonal_lift_check(
    f: &SliceFunction,
    points: &[Quaternion],
    nodes: usize,
) -> Result<LiftCheckReport> {
    use crate::finite_diff::{fd_apply, FdConfig, FdOperator};

    let t = CommutingOperator::diagonal_lift(points);
    let contour = default_contour(&t, crate::quaternion::JE1, nodes)?;
    let s_out = calculus_apply(Calculus::S, f, &t, &contour)?;
    let f_out = calculus_apply(Calculus::F, f, &t, &contour)?;
    let p2_out = calculus_apply(Calculus::P2, f, &t, &contour)?;

    let eval = |q: Quaternion| f.eval(q).expect("lift points must lie in the domain of f");
    let mut report = LiftCheckReport {
        s_deviation: 0.0,
        f_deviation: 0.0,
        p2_deviation: 0.0,
    };
    for (i, &q) in points.iter().enumerate() {
        let cfg = FdConfig::scaled_to(q);
        let s_expect = eval(q);
        let f_expect = fd_apply(FdOperator::Delta, &eval, q, cfg);
        let p2_expect = fd_apply(FdOperator::Dbar, &eval, q, cfg);
        let rel =
            |got: Quaternion, expect: Quaternion| (got - expect).norm() / (1.0 + expect.norm());
        report.s_deviation = report
            .s_deviation
            .max(rel(s_out.diagonal_entry(i), s_expect));
        report.f_deviation = report
            .f_deviation
            .max(rel(f_out.diagonal_entry(i), f_expect));
        report.p2_deviation = report
            .p2_deviation
            .max(rel(p2_out.diagonal_entry(i), p2_expect));
    }
    Ok(report)
}
