//! Exact calculus over the split-quaternion algebra and the
//! 4-dimensional geometry it generates.
//!
//! The crate has three layers:
//!
//! * [`algebra`] — exact rational arithmetic in the split-quaternion
//!   algebra: multiplication, conjugation, the indefinite norm, element
//!   classification, and the 2x2 real-matrix representation.
//! * [`poly`], [`map`], [`fueter`] — polynomial maps `R^4 -> A`, the two
//!   Cauchy-Fueter operators `D_L`/`D_R`, exact one-sided regularity
//!   decisions, and generators of regular maps from symmetrized products
//!   of the degree-one building blocks `zeta_a = x^a - x0 i_a`.
//! * [`geom`], [`curvature`] — conformally flat almost epsilon-Kahler
//!   structures `(g = hG, J, Omega)` built from one-sided regular maps,
//!   with exact symbolic verification of `dOmega = 0`, sampled
//!   verification of the pointwise identities, and a finite-difference
//!   Weyl-tensor check of conformal flatness.
//!
//! File formats for maps, structures, and verification reports live in
//! [`format`]; deterministic low-discrepancy sampling of rational boxes
//! lives in [`sample`].

pub mod algebra;
pub mod curvature;
pub mod format;
pub mod fueter;
pub mod geom;
pub mod map;
pub mod poly;
pub mod sample;
pub mod scalar;

#[cfg(test)]
pub(crate) mod testutil;

pub use algebra::{ElementClass, NormKind, NormValue, NotInvertible, Paraquaternion};
pub use curvature::{weyl_numeric, CurvatureError};
pub use fueter::{
    d_left, d_right, from_potential, fueter_sum, left_regularity, lr_difference, regularity,
    right_regularity, symmetrized_zeta_product, zeta, FueterError, FueterTerm, Regularity, Side,
};
pub use geom::{
    build_structure, builtin_example, choose_epsilon, d_omega, frame_sample, h_squared, j_field,
    metric_field, omega_field, verify_structure, BuiltinExample, Chirality, DOmega, Epsilon,
    EpsilonStructure, FrameSample, GeomError, ResidualMaxima, StructureReport, VerifyOptions,
};
pub use map::PolyMap;
pub use poly::{Exponents, Poly4};
pub use sample::{BadDomain, BoxDomain, Point4};
pub use scalar::{format_scalar, parse_scalar, scalar_to_f64, Scalar, ScalarParseError};
