//! Conformally flat almost epsilon-Kahler structures on a coordinate box.
//!
//! On a chart with coordinates `x0..x3`, the metric is `g = h G` with
//! `G = diag(-1,-1,+1,+1)` (0-based indices throughout) and a positive
//! function `h`. The almost complex or almost product structure `J`
//! (`J^2 = eps I`, `eps = -1` or `+1`) and the fundamental form
//! `Omega_ij = sum_s g_is J^s_j` come in two chiral families, and a
//! structure is almost epsilon-Kahlerian (`d Omega = 0`) exactly when the
//! map `f = f1 i1 + f2 i2 + f3 i3` built from `f1 = h a, f2 = h b,
//! f3 = h c` is one-sided regular on the matching side.
//!
//! Everything polynomial in `f` (the form, its exterior derivative, the
//! `h^2` relation) is verified exactly; identities that involve
//! `h = sqrt(h^2)` itself are verified numerically at sampled points,
//! and conformal flatness is checked through a finite-difference Weyl
//! tensor.

use crate::curvature::{weyl_numeric, CurvatureError};
use crate::fueter::{regularity, Regularity, Side};
use crate::map::PolyMap;
use crate::poly::Poly4;
use crate::sample::{BoxDomain, Point4};
use crate::scalar::{ratio, scalar_to_f64, Scalar};
use nalgebra::Matrix4;
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

/// Number of sampled points used to decide the sign of the defining
/// quadratic when building a structure.
const SIGN_SAMPLES: usize = 256;

/// Fraction of the box width kept as a margin when probing curvature.
fn weyl_margin() -> Scalar {
    ratio(1, 16)
}

/// Which of the two chiral `J`-families a structure uses. `LeftJ` pairs
/// with left-regularity of `f`, `RightJ` with right-regularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    LeftJ,
    RightJ,
}

impl Chirality {
    pub fn side(self) -> Side {
        match self {
            Chirality::LeftJ => Side::Left,
            Chirality::RightJ => Side::Right,
        }
    }
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chirality::LeftJ => write!(f, "left"),
            Chirality::RightJ => write!(f, "right"),
        }
    }
}

/// The sign in `J^2 = eps I`: `Minus` gives an almost pseudo-Hermitian
/// structure, `Plus` an almost para-Hermitian one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Epsilon {
    Minus,
    Plus,
}

impl Epsilon {
    pub fn value(self) -> i64 {
        match self {
            Epsilon::Minus => -1,
            Epsilon::Plus => 1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Epsilon::Minus),
            1 => Some(Epsilon::Plus),
            _ => None,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeomError {
    #[error("map has a nonzero real part")]
    NonzeroRealPart,
    #[error("defining quadratic (f1)^2-(f2)^2-(f3)^2 changes sign or vanishes on the sampled domain")]
    SignChange,
    #[error("map is not {side}-regular")]
    NotRegular {
        side: Side,
        residual: Box<PolyMap>,
    },
    #[error("h^2 is not positive at a sampled point")]
    DegeneratePoint,
    #[error(transparent)]
    SingularMetric(#[from] CurvatureError),
}

/// A built structure. The fields are public so that files can be loaded
/// and inspected verbatim; `verify_structure` is the invariant checker.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonStructure {
    pub chirality: Chirality,
    pub epsilon: Epsilon,
    /// The defining map; real part identically zero.
    pub f: PolyMap,
    /// The exact polynomial `-eps ((f1)^2 - (f2)^2 - (f3)^2)`.
    pub h_sq: Poly4,
    pub domain: BoxDomain,
}

/// Pointwise data of a structure at one sample point.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameSample {
    pub point: [f64; 4],
    pub g: Matrix4<f64>,
    pub j: Matrix4<f64>,
    pub omega: Matrix4<f64>,
    pub h: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Verification settings. `tol` bounds the four pointwise identities;
/// the Weyl residual is a finite-difference quantity and carries its own
/// tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    pub weyl_step: f64,
    pub weyl_points: usize,
    pub weyl_tol: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            samples: 1000,
            tol: 1e-12,
            seed: 0,
            weyl_step: 1e-3,
            weyl_points: 10,
            weyl_tol: 1e-6,
        }
    }
}

/// Maxima over the sampled points of each identity residual.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ResidualMaxima {
    /// `max ||J^2 - eps I||`
    pub j_squared: f64,
    /// `max ||J^T g J + eps g||`
    pub compatibility: f64,
    /// `max ||g J - Omega||`
    pub omega_consistency: f64,
    /// `max |a^2 - b^2 - c^2 + eps|`
    pub abc_relation: f64,
    /// `max |Weyl|` over the curvature probe points
    pub weyl: f64,
}

/// Outcome of `verify_structure`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureReport {
    pub pass: bool,
    pub symbolic_domega_zero: bool,
    pub regularity_ok: bool,
    pub residuals: ResidualMaxima,
    pub samples_used: usize,
    pub seed: u64,
    pub tol: f64,
    pub weyl_step: f64,
    pub weyl_tol: f64,
}

fn require_zero_real_part(f: &PolyMap) -> Result<(), GeomError> {
    if f.has_zero_real_part() {
        Ok(())
    } else {
        Err(GeomError::NonzeroRealPart)
    }
}

/// The defining quadratic `(f1)^2 - (f2)^2 - (f3)^2`.
fn defining_quadratic(f: &PolyMap) -> Poly4 {
    &(&(&f.f1 * &f.f1) - &(&f.f2 * &f.f2)) - &(&f.f3 * &f.f3)
}

/// `h^2 = -eps ((f1)^2 - (f2)^2 - (f3)^2)`, exactly.
pub fn h_squared(f: &PolyMap, epsilon: Epsilon) -> Result<Poly4, GeomError> {
    require_zero_real_part(f)?;
    let q = defining_quadratic(f);
    Ok(match epsilon {
        Epsilon::Minus => q,
        Epsilon::Plus => -&q,
    })
}

/// Picks the sign that makes `h^2` positive on the sampled box. Fails
/// with `SignChange` if the quadratic takes both signs or vanishes at a
/// sample, since the structure is undefined there.
pub fn choose_epsilon(
    f: &PolyMap,
    domain: &BoxDomain,
    samples: usize,
) -> Result<Epsilon, GeomError> {
    require_zero_real_part(f)?;
    let q = defining_quadratic(f);
    let mut saw_positive = false;
    let mut saw_negative = false;
    for point in domain.sample(samples.max(1), 0) {
        let value = q.eval(&point);
        if value.is_zero() {
            return Err(GeomError::SignChange);
        }
        if value.is_positive() {
            saw_positive = true;
        } else {
            saw_negative = true;
        }
        if saw_positive && saw_negative {
            return Err(GeomError::SignChange);
        }
    }
    Ok(if saw_positive {
        Epsilon::Minus
    } else {
        Epsilon::Plus
    })
}

/// The fundamental-form matrix `Omega_ij` with exact polynomial entries,
/// antisymmetric by construction.
pub fn omega_field(f: &PolyMap, chirality: Chirality) -> Result<[[Poly4; 4]; 4], GeomError> {
    require_zero_real_part(f)?;
    let (f1, f2, f3) = (&f.f1, &f.f2, &f.f3);
    let z = Poly4::zero;
    Ok(match chirality {
        Chirality::LeftJ => [
            [z(), -f1, -f2, -f3],
            [f1.clone(), z(), f3.clone(), -f2],
            [f2.clone(), -f3, z(), -f1],
            [f3.clone(), f2.clone(), f1.clone(), z()],
        ],
        Chirality::RightJ => [
            [z(), -f1, -f2, -f3],
            [f1.clone(), z(), -f3, f2.clone()],
            [f2.clone(), f3.clone(), z(), f1.clone()],
            [f3.clone(), -f2, -f1, z()],
        ],
    })
}

fn j_matrix(chirality: Chirality, a: f64, b: f64, c: f64) -> Matrix4<f64> {
    match chirality {
        #[rustfmt::skip]
        Chirality::LeftJ => Matrix4::new(
            0.0,  a,    b,    c,
            -a,   0.0,  -c,   b,
            b,    -c,   0.0,  -a,
            c,    b,    a,    0.0,
        ),
        #[rustfmt::skip]
        Chirality::RightJ => Matrix4::new(
            0.0,  a,    b,    c,
            -a,   0.0,  c,    -b,
            b,    c,    0.0,  a,
            c,    -b,   -a,   0.0,
        ),
    }
}

fn norden_metric(h: f64) -> Matrix4<f64> {
    Matrix4::from_diagonal(&nalgebra::Vector4::new(-h, -h, h, h))
}

/// Evaluates `h = sqrt(h^2)` at the point, failing if `h^2 <= 0` there.
fn h_at(h_sq: &Poly4, point: &Point4) -> Result<f64, GeomError> {
    let value = h_sq.eval(point);
    if !value.is_positive() {
        return Err(GeomError::DegeneratePoint);
    }
    Ok(scalar_to_f64(&value).sqrt())
}

/// The `J`-matrix at a point, with `a = f1/h`, `b = f2/h`, `c = f3/h`.
pub fn j_field(
    f: &PolyMap,
    h_sq: &Poly4,
    chirality: Chirality,
    point: &Point4,
) -> Result<Matrix4<f64>, GeomError> {
    let h = h_at(h_sq, point)?;
    let value = f.evaluate(point);
    Ok(j_matrix(
        chirality,
        scalar_to_f64(&value.im1) / h,
        scalar_to_f64(&value.im2) / h,
        scalar_to_f64(&value.im3) / h,
    ))
}

/// The metric `g = h G` at a point, `G = diag(-1,-1,+1,+1)`.
pub fn metric_field(h_sq: &Poly4, point: &Point4) -> Result<Matrix4<f64>, GeomError> {
    Ok(norden_metric(h_at(h_sq, point)?))
}

/// The four independent components of the exterior derivative of the
/// fundamental form, `(dOmega)_ijk = 1/3 (d_i Omega_jk + d_j Omega_ki +
/// d_k Omega_ij)`, as exact polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DOmega {
    pub c012: Poly4,
    pub c013: Poly4,
    pub c023: Poly4,
    pub c123: Poly4,
}

impl DOmega {
    pub fn is_zero(&self) -> bool {
        self.c012.is_zero() && self.c013.is_zero() && self.c023.is_zero() && self.c123.is_zero()
    }

    pub fn components(&self) -> [(&'static str, &Poly4); 4] {
        [
            ("012", &self.c012),
            ("013", &self.c013),
            ("023", &self.c023),
            ("123", &self.c123),
        ]
    }
}

pub fn d_omega(f: &PolyMap, chirality: Chirality) -> Result<DOmega, GeomError> {
    let omega = omega_field(f, chirality)?;
    let third = ratio(1, 3);
    let component = |i: usize, j: usize, k: usize| {
        (&(&omega[j][k].partial(i) + &omega[k][i].partial(j)) + &omega[i][j].partial(k))
            .scale(&third)
    };
    Ok(DOmega {
        c012: component(0, 1, 2),
        c013: component(0, 1, 3),
        c023: component(0, 2, 3),
        c123: component(1, 2, 3),
    })
}

/// Checks side-matching regularity exactly, derives the sign of `eps`
/// from the domain, and assembles the structure.
pub fn build_structure(
    f: &PolyMap,
    chirality: Chirality,
    domain: BoxDomain,
) -> Result<EpsilonStructure, GeomError> {
    require_zero_real_part(f)?;
    if let Regularity::Residual(residual) = regularity(f, chirality.side()) {
        return Err(GeomError::NotRegular {
            side: chirality.side(),
            residual: Box::new(residual),
        });
    }
    let epsilon = choose_epsilon(f, &domain, SIGN_SAMPLES)?;
    let h_sq = h_squared(f, epsilon)?;
    Ok(EpsilonStructure {
        chirality,
        epsilon,
        f: f.clone(),
        h_sq,
        domain,
    })
}

/// Pointwise data of the structure at an exact rational point.
pub fn frame_sample(s: &EpsilonStructure, point: &Point4) -> Result<FrameSample, GeomError> {
    let h = h_at(&s.h_sq, point)?;
    let value = s.f.evaluate(point);
    let a = scalar_to_f64(&value.im1) / h;
    let b = scalar_to_f64(&value.im2) / h;
    let c = scalar_to_f64(&value.im3) / h;
    let omega_polys = omega_field(&s.f, s.chirality)?;
    let mut omega = Matrix4::zeros();
    for (row, row_polys) in omega_polys.iter().enumerate() {
        for (col, entry) in row_polys.iter().enumerate() {
            omega[(row, col)] = scalar_to_f64(&entry.eval(point));
        }
    }
    Ok(FrameSample {
        point: std::array::from_fn(|k| scalar_to_f64(&point[k])),
        g: norden_metric(h),
        j: j_matrix(s.chirality, a, b, c),
        omega,
        h,
        a,
        b,
        c,
    })
}

fn max_abs(m: &Matrix4<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
}

/// Runs the symbolic checks (`dOmega = 0` exactly, side-matching
/// regularity) and samples the pointwise identities over the domain;
/// also probes the Weyl tensor of `g = h G` by finite differences at a
/// few interior points.
pub fn verify_structure(
    s: &EpsilonStructure,
    options: &VerifyOptions,
) -> Result<StructureReport, GeomError> {
    require_zero_real_part(&s.f)?;
    let regularity_ok = regularity(&s.f, s.chirality.side()).is_regular();
    let symbolic_domega_zero = d_omega(&s.f, s.chirality)?.is_zero();

    let eps = s.epsilon.as_f64();
    let identity = Matrix4::identity();
    let mut residuals = ResidualMaxima::default();
    for point in s.domain.sample(options.samples, options.seed) {
        let frame = frame_sample(s, &point)?;
        residuals.j_squared = residuals
            .j_squared
            .max(max_abs(&(frame.j * frame.j - identity * eps)));
        residuals.compatibility = residuals
            .compatibility
            .max(max_abs(&(frame.j.transpose() * frame.g * frame.j + frame.g * eps)));
        residuals.omega_consistency = residuals
            .omega_consistency
            .max(max_abs(&(frame.g * frame.j - frame.omega)));
        residuals.abc_relation = residuals
            .abc_relation
            .max((frame.a * frame.a - frame.b * frame.b - frame.c * frame.c + eps).abs());
    }

    let h_sq = s.h_sq.clone();
    let sampler = move |p: &[f64; 4]| norden_metric(h_sq.eval_f64(p).sqrt());
    for point in s.domain.shrink(&weyl_margin()).sample(options.weyl_points, options.seed) {
        let numeric_point = std::array::from_fn(|k| scalar_to_f64(&point[k]));
        let w = weyl_numeric(&sampler, &numeric_point, options.weyl_step)?;
        residuals.weyl = residuals.weyl.max(w);
    }

    let pass = regularity_ok
        && symbolic_domega_zero
        && residuals.j_squared < options.tol
        && residuals.compatibility < options.tol
        && residuals.omega_consistency < options.tol
        && residuals.abc_relation < options.tol
        && residuals.weyl < options.weyl_tol;
    Ok(StructureReport {
        pass,
        symbolic_domega_zero,
        regularity_ok,
        residuals,
        samples_used: options.samples,
        seed: options.seed,
        tol: options.tol,
        weyl_step: options.weyl_step,
        weyl_tol: options.weyl_tol,
    })
}

/// Built-in demonstration maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinExample {
    /// `2 x0 i1 + (x0 - x1 - x2 - x3) i2 + (x0 + x1 + x2 + x3) i3`,
    /// left-regular; equals the left generator sum of `zeta1 + zeta2 +
    /// zeta3` with coefficient `-i2 + i3` on the right.
    A,
    /// The i2/i3 swap of `A`, right-regular; equals `i2 - i3` times
    /// `zeta1 + zeta2 + zeta3` on the left.
    B,
}

pub fn builtin_example(which: BuiltinExample) -> PolyMap {
    let x = Poly4::coordinate;
    let sum = &(&x(1) + &x(2)) + &x(3);
    let double_x0 = x(0).scale(&ratio(2, 1));
    let plus = &x(0) + &sum;
    let minus = &x(0) - &sum;
    match which {
        BuiltinExample::A => PolyMap::new(Poly4::zero(), double_x0, minus, plus),
        BuiltinExample::B => PolyMap::new(Poly4::zero(), double_x0, plus, minus),
    }
}
