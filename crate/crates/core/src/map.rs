//! Polynomial maps from R^4 into the split-quaternion algebra.

use crate::algebra::Paraquaternion;
use crate::poly::Poly4;
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A map `f = f0 + f1*i1 + f2*i2 + f3*i3` whose components are exact
/// polynomials in the coordinates `x0..x3`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyMap {
    pub f0: Poly4,
    pub f1: Poly4,
    pub f2: Poly4,
    pub f3: Poly4,
}

impl PolyMap {
    pub fn new(f0: Poly4, f1: Poly4, f2: Poly4, f3: Poly4) -> Self {
        Self { f0, f1, f2, f3 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant map with the given value.
    pub fn constant(value: &Paraquaternion) -> Self {
        Self {
            f0: Poly4::constant(value.re.clone()),
            f1: Poly4::constant(value.im1.clone()),
            f2: Poly4::constant(value.im2.clone()),
            f3: Poly4::constant(value.im3.clone()),
        }
    }

    /// Component by index 0..=3 in the order `1, i1, i2, i3`.
    pub fn component(&self, k: usize) -> &Poly4 {
        match k {
            0 => &self.f0,
            1 => &self.f1,
            2 => &self.f2,
            3 => &self.f3,
            _ => panic!("component index out of range: {k}"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f0.is_zero() && self.f1.is_zero() && self.f2.is_zero() && self.f3.is_zero()
    }

    pub fn has_zero_real_part(&self) -> bool {
        self.f0.is_zero()
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[Scalar; 4]) -> Paraquaternion {
        Paraquaternion::new(
            self.f0.eval(point),
            self.f1.eval(point),
            self.f2.eval(point),
            self.f3.eval(point),
        )
    }

    /// Floating-point evaluation, returning the four components.
    pub fn evaluate_f64(&self, point: &[f64; 4]) -> [f64; 4] {
        [
            self.f0.eval_f64(point),
            self.f1.eval_f64(point),
            self.f2.eval_f64(point),
            self.f3.eval_f64(point),
        ]
    }

    /// Componentwise formal partial derivative.
    pub fn partial(&self, axis: usize) -> Self {
        Self {
            f0: self.f0.partial(axis),
            f1: self.f1.partial(axis),
            f2: self.f2.partial(axis),
            f3: self.f3.partial(axis),
        }
    }

    /// Pointwise algebra product `(fg)(x) = f(x) g(x)`; the components
    /// expand by the same rule as the scalar product, with polynomial
    /// coefficients.
    pub fn pointwise_mul(&self, rhs: &Self) -> Self {
        let (a0, a1, a2, a3) = (&self.f0, &self.f1, &self.f2, &self.f3);
        let (b0, b1, b2, b3) = (&rhs.f0, &rhs.f1, &rhs.f2, &rhs.f3);
        Self {
            f0: &(&(a0 * b0) - &(a1 * b1)) + &(&(a2 * b2) + &(a3 * b3)),
            f1: &(&(a0 * b1) + &(a1 * b0)) + &(&(a3 * b2) - &(a2 * b3)),
            f2: &(&(a0 * b2) - &(a1 * b3)) + &(&(a2 * b0) + &(a3 * b1)),
            f3: &(&(a0 * b3) + &(a1 * b2)) + &(&(a3 * b0) - &(a2 * b1)),
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self {
            f0: self.f0.scale(factor),
            f1: self.f1.scale(factor),
            f2: self.f2.scale(factor),
            f3: self.f3.scale(factor),
        }
    }
}

impl Add for &PolyMap {
    type Output = PolyMap;
    fn add(self, rhs: &PolyMap) -> PolyMap {
        PolyMap {
            f0: &self.f0 + &rhs.f0,
            f1: &self.f1 + &rhs.f1,
            f2: &self.f2 + &rhs.f2,
            f3: &self.f3 + &rhs.f3,
        }
    }
}

impl Sub for &PolyMap {
    type Output = PolyMap;
    fn sub(self, rhs: &PolyMap) -> PolyMap {
        PolyMap {
            f0: &self.f0 - &rhs.f0,
            f1: &self.f1 - &rhs.f1,
            f2: &self.f2 - &rhs.f2,
            f3: &self.f3 - &rhs.f3,
        }
    }
}

impl Neg for &PolyMap {
    type Output = PolyMap;
    fn neg(self) -> PolyMap {
        PolyMap {
            f0: -&self.f0,
            f1: -&self.f1,
            f2: -&self.f2,
            f3: -&self.f3,
        }
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})*i1 + ({})*i2 + ({})*i3",
            self.f0, self.f1, self.f2, self.f3
        )
    }
}
