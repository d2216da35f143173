//! Exact multivariate polynomials in the four coordinates `x0..x3`.

use crate::scalar::{format_scalar, scalar_to_f64, Scalar};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent quadruple `(e0, e1, e2, e3)` of a monomial.
pub type Exponents = [u32; 4];

/// A polynomial with rational coefficients, stored sparsely. Zero
/// coefficients are never kept, and the term map is ordered by exponent
/// quadruple, which makes the serialized form canonical.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly4 {
    terms: BTreeMap<Exponents, Scalar>,
}

impl Poly4 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(value: Scalar) -> Self {
        Self::monomial([0, 0, 0, 0], value)
    }

    /// The coordinate polynomial `x{axis}`. Panics unless `axis <= 3`.
    pub fn coordinate(axis: usize) -> Self {
        assert!(axis < 4, "coordinate axis out of range: {axis}");
        let mut exp = [0u32; 4];
        exp[axis] = 1;
        Self::monomial(exp, Scalar::one())
    }

    pub fn monomial(exp: Exponents, coef: Scalar) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coef);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    /// Adds `coef * x^exp`, merging with an existing term and dropping the
    /// entry if the sum is zero.
    pub fn add_term(&mut self, exp: Exponents, coef: Scalar) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(slot) => {
                slot.insert(coef);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &coef;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(exp, coef)| (*exp, coef * factor))
                .collect(),
        }
    }

    /// Formal partial derivative with respect to `x{axis}`.
    pub fn partial(&self, axis: usize) -> Self {
        assert!(axis < 4, "coordinate axis out of range: {axis}");
        let mut out = Self::default();
        for (exp, coef) in &self.terms {
            let e = exp[axis];
            if e == 0 {
                continue;
            }
            let mut lowered = *exp;
            lowered[axis] = e - 1;
            out.add_term(lowered, coef * Scalar::from_integer(e.into()));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Scalar; 4]) -> Scalar {
        let mut powers: [Vec<Scalar>; 4] = [vec![], vec![], vec![], vec![]];
        for axis in 0..4 {
            let max = self
                .terms
                .keys()
                .map(|e| e[axis])
                .max()
                .unwrap_or(0) as usize;
            let mut table = Vec::with_capacity(max + 1);
            table.push(Scalar::one());
            for k in 1..=max {
                let next = &table[k - 1] * &point[axis];
                table.push(next);
            }
            powers[axis] = table;
        }
        let mut acc = Scalar::zero();
        for (exp, coef) in &self.terms {
            let mut term = coef.clone();
            for axis in 0..4 {
                term *= &powers[axis][exp[axis] as usize];
            }
            acc += term;
        }
        acc
    }

    /// Floating-point evaluation; coefficients are rounded to `f64` first.
    pub fn eval_f64(&self, point: &[f64; 4]) -> f64 {
        let mut acc = 0.0;
        for (exp, coef) in &self.terms {
            let mut term = scalar_to_f64(coef);
            for axis in 0..4 {
                term *= point[axis].powi(exp[axis] as i32);
            }
            acc += term;
        }
        acc
    }
}

fn checked_exp_sum(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = [0u32; 4];
    for k in 0..4 {
        out[k] = a[k].checked_add(b[k]).expect("monomial exponent overflow");
    }
    out
}

impl Add for &Poly4 {
    type Output = Poly4;
    fn add(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (exp, coef) in &rhs.terms {
            out.add_term(*exp, coef.clone());
        }
        out
    }
}

impl Sub for &Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: &Poly4) -> Poly4 {
        let mut out = self.clone();
        for (exp, coef) in &rhs.terms {
            out.add_term(*exp, -coef);
        }
        out
    }
}

impl Neg for &Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        Poly4 {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: &Poly4) -> Poly4 {
        let mut out = Poly4::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(checked_exp_sum(ea, eb), ca * cb);
            }
        }
        out
    }
}

impl Add for Poly4 {
    type Output = Poly4;
    fn add(self, rhs: Poly4) -> Poly4 {
        &self + &rhs
    }
}

impl Sub for Poly4 {
    type Output = Poly4;
    fn sub(self, rhs: Poly4) -> Poly4 {
        &self - &rhs
    }
}

impl Neg for Poly4 {
    type Output = Poly4;
    fn neg(self) -> Poly4 {
        -&self
    }
}

impl Mul for Poly4 {
    type Output = Poly4;
    fn mul(self, rhs: Poly4) -> Poly4 {
        &self * &rhs
    }
}

impl fmt::Display for Poly4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, coef) in &self.terms {
            let magnitude = coef.abs();
            if first {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut vars = String::new();
            for (axis, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !vars.is_empty() {
                    vars.push('*');
                }
                vars.push_str(&format!("x{axis}"));
                if e > 1 {
                    vars.push_str(&format!("^{e}"));
                }
            }
            if vars.is_empty() {
                write!(f, "{}", format_scalar(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{}*{}", format_scalar(&magnitude), vars)?;
            }
        }
        Ok(())
    }
}
