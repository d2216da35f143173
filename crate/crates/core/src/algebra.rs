//! Exact arithmetic in the split-quaternion algebra.
//!
//! Elements are `x = x0 + x1*i1 + x2*i2 + x3*i3` with rational coefficients
//! and basis relations
//!
//! ```text
//! i1^2 = -1,   i2^2 = i3^2 = +1,
//! i1*i2 = -i2*i1 = i3,
//! i2*i3 = -i3*i2 = -i1,
//! i1*i3 = -i3*i1 = -i2.
//! ```
//!
//! The algebra is associative and noncommutative and, unlike the ordinary
//! quaternions, contains zero divisors, nilpotents, and nontrivial
//! idempotents: the squared norm `x0^2 + x1^2 - x2^2 - x3^2` is an
//! indefinite quadratic form. All computations here are exact over the
//! rationals, so "is zero" verdicts are decisions, not tolerances.

use crate::scalar::{format_scalar, scalar_to_f64, Scalar};
use num_traits::{Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// A split quaternion with exact rational components.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Paraquaternion {
    /// Coefficient of 1.
    pub re: Scalar,
    /// Coefficient of i1 (square -1).
    pub im1: Scalar,
    /// Coefficient of i2 (square +1).
    pub im2: Scalar,
    /// Coefficient of i3 (square +1).
    pub im3: Scalar,
}

/// Requested the inverse of an element with zero squared norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("element has zero squared norm and is not invertible")]
pub struct NotInvertible;

/// Which branch the norm `sqrt(x * conj(x))` lands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    /// Positive squared norm: the norm is the real value `magnitude`.
    Real,
    /// Negative squared norm: the norm is `magnitude * i` on the upper
    /// half of the complex plane.
    Imaginary,
    /// Zero squared norm.
    Zero,
}

/// Norm of an element, encoded as a nonnegative magnitude plus a branch tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormValue {
    pub magnitude: f64,
    pub kind: NormKind,
}

/// Classification flags. The categories overlap: every idempotent other
/// than 0 and 1 is a zero divisor, and so is every nonzero nilpotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ElementClass {
    pub invertible: bool,
    pub zero_divisor: bool,
    pub nilpotent: bool,
    pub idempotent: bool,
}

impl Paraquaternion {
    pub fn new(re: Scalar, im1: Scalar, im2: Scalar, im3: Scalar) -> Self {
        Self { re, im1, im2, im3 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_real(Scalar::from_integer(1.into()))
    }

    pub fn from_real(re: Scalar) -> Self {
        Self {
            re,
            ..Self::default()
        }
    }

    /// The basis element `i1`, `i2`, or `i3`. Panics unless `alpha` is 1..=3.
    pub fn basis(alpha: usize) -> Self {
        let mut x = Self::default();
        *x.imaginary_mut(alpha) = Scalar::from_integer(1.into());
        x
    }

    pub fn i1() -> Self {
        Self::basis(1)
    }

    pub fn i2() -> Self {
        Self::basis(2)
    }

    pub fn i3() -> Self {
        Self::basis(3)
    }

    /// Component by index 0..=3 in the order `1, i1, i2, i3`.
    pub fn component(&self, k: usize) -> &Scalar {
        match k {
            0 => &self.re,
            1 => &self.im1,
            2 => &self.im2,
            3 => &self.im3,
            _ => panic!("component index out of range: {k}"),
        }
    }

    fn imaginary_mut(&mut self, alpha: usize) -> &mut Scalar {
        match alpha {
            1 => &mut self.im1,
            2 => &mut self.im2,
            3 => &mut self.im3,
            _ => panic!("imaginary index out of range: {alpha}"),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im1.is_zero() && self.im2.is_zero() && self.im3.is_zero()
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self {
            re: &self.re * factor,
            im1: &self.im1 * factor,
            im2: &self.im2 * factor,
            im3: &self.im3 * factor,
        }
    }

    /// Conjugate: real part fixed, imaginary part negated.
    pub fn conjugate(&self) -> Self {
        Self {
            re: self.re.clone(),
            im1: -&self.im1,
            im2: -&self.im2,
            im3: -&self.im3,
        }
    }

    /// Squared norm `x * conj(x) = x0^2 + x1^2 - x2^2 - x3^2`, exactly.
    pub fn normsq(&self) -> Scalar {
        &self.re * &self.re + &self.im1 * &self.im1
            - &self.im2 * &self.im2
            - &self.im3 * &self.im3
    }

    /// Norm `sqrt(x * conj(x))`, tagged by the sign of the squared norm.
    pub fn norm(&self) -> NormValue {
        let nsq = self.normsq();
        if nsq.is_zero() {
            NormValue {
                magnitude: 0.0,
                kind: NormKind::Zero,
            }
        } else if nsq.is_positive() {
            NormValue {
                magnitude: scalar_to_f64(&nsq).sqrt(),
                kind: NormKind::Real,
            }
        } else {
            NormValue {
                magnitude: scalar_to_f64(&-nsq).sqrt(),
                kind: NormKind::Imaginary,
            }
        }
    }

    /// Multiplicative inverse `conj(x) / normsq(x)`.
    pub fn inverse(&self) -> Result<Self, NotInvertible> {
        let nsq = self.normsq();
        if nsq.is_zero() {
            return Err(NotInvertible);
        }
        Ok(self.conjugate().scale(&nsq.recip()))
    }

    /// Classification flags, all decided exactly.
    pub fn classify(&self) -> ElementClass {
        let nsq = self.normsq();
        let square = self * self;
        ElementClass {
            invertible: !nsq.is_zero(),
            zero_divisor: !self.is_zero() && nsq.is_zero(),
            nilpotent: !self.is_zero() && square.is_zero(),
            idempotent: square == *self,
        }
    }

    /// The 2x2 real-matrix representation
    /// `[[x0 - x3, -x1 + x2], [x1 + x2, x0 + x3]]`.
    ///
    /// This fixes `i1 -> [[0,-1],[1,0]]`, `i2 -> [[0,1],[1,0]]`,
    /// `i3 -> [[-1,0],[0,1]]`; it is an algebra homomorphism and its
    /// determinant equals the squared norm.
    pub fn to_matrix(&self) -> [[Scalar; 2]; 2] {
        [
            [&self.re - &self.im3, &self.im2 - &self.im1],
            [&self.im1 + &self.im2, &self.re + &self.im3],
        ]
    }
}

impl Add for &Paraquaternion {
    type Output = Paraquaternion;
    fn add(self, rhs: &Paraquaternion) -> Paraquaternion {
        Paraquaternion {
            re: &self.re + &rhs.re,
            im1: &self.im1 + &rhs.im1,
            im2: &self.im2 + &rhs.im2,
            im3: &self.im3 + &rhs.im3,
        }
    }
}

impl Sub for &Paraquaternion {
    type Output = Paraquaternion;
    fn sub(self, rhs: &Paraquaternion) -> Paraquaternion {
        Paraquaternion {
            re: &self.re - &rhs.re,
            im1: &self.im1 - &rhs.im1,
            im2: &self.im2 - &rhs.im2,
            im3: &self.im3 - &rhs.im3,
        }
    }
}

impl Neg for &Paraquaternion {
    type Output = Paraquaternion;
    fn neg(self) -> Paraquaternion {
        Paraquaternion {
            re: -&self.re,
            im1: -&self.im1,
            im2: -&self.im2,
            im3: -&self.im3,
        }
    }
}

impl Mul for &Paraquaternion {
    type Output = Paraquaternion;
    fn mul(self, rhs: &Paraquaternion) -> Paraquaternion {
        let (a0, a1, a2, a3) = (&self.re, &self.im1, &self.im2, &self.im3);
        let (b0, b1, b2, b3) = (&rhs.re, &rhs.im1, &rhs.im2, &rhs.im3);
        Paraquaternion {
            re: a0 * b0 - a1 * b1 + a2 * b2 + a3 * b3,
            im1: a0 * b1 + a1 * b0 - a2 * b3 + a3 * b2,
            im2: a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            im3: a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        }
    }
}

impl Add for Paraquaternion {
    type Output = Paraquaternion;
    fn add(self, rhs: Paraquaternion) -> Paraquaternion {
        &self + &rhs
    }
}

impl Sub for Paraquaternion {
    type Output = Paraquaternion;
    fn sub(self, rhs: Paraquaternion) -> Paraquaternion {
        &self - &rhs
    }
}

impl Neg for Paraquaternion {
    type Output = Paraquaternion;
    fn neg(self) -> Paraquaternion {
        -&self
    }
}

impl Mul for Paraquaternion {
    type Output = Paraquaternion;
    fn mul(self, rhs: Paraquaternion) -> Paraquaternion {
        &self * &rhs
    }
}

impl fmt::Display for Paraquaternion {
    /// Canonical text form `a+b*i1+c*i2+d*i3`; zero terms are omitted,
    /// unit imaginary coefficients print as bare basis names.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.re.is_zero() {
            write!(f, "{}", format_scalar(&self.re))?;
            wrote = true;
        }
        for (coef, name) in [(&self.im1, "i1"), (&self.im2, "i2"), (&self.im3, "i3")] {
            if coef.is_zero() {
                continue;
            }
            let magnitude = coef.abs();
            let sign = if coef.is_negative() { "-" } else { "+" };
            if wrote {
                write!(f, "{sign}")?;
            } else if coef.is_negative() {
                write!(f, "-")?;
            }
            if magnitude == Scalar::from_integer(1.into()) {
                write!(f, "{name}")?;
            } else {
                write!(f, "{}*{}", format_scalar(&magnitude), name)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
