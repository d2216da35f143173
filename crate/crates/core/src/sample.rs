//! Axis-aligned rational boxes and deterministic low-discrepancy sampling.

use crate::scalar::Scalar;
use num_traits::{One, Zero};
use thiserror::Error;

/// A rational point in R^4.
pub type Point4 = [Scalar; 4];

const HALTON_BASES: [u64; 4] = [2, 3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("box has hi < lo on axis {axis}")]
pub struct BadDomain {
    pub axis: usize,
}

/// An axis-aligned box with rational endpoints, `lo[k] <= hi[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxDomain {
    lo: Point4,
    hi: Point4,
}

impl BoxDomain {
    pub fn new(lo: Point4, hi: Point4) -> Result<Self, BadDomain> {
        for axis in 0..4 {
            if lo[axis] > hi[axis] {
                return Err(BadDomain { axis });
            }
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> &Point4 {
        &self.lo
    }

    pub fn hi(&self) -> &Point4 {
        &self.hi
    }

    pub fn center(&self) -> Point4 {
        let half = Scalar::new(1.into(), 2.into());
        std::array::from_fn(|k| (&self.lo[k] + &self.hi[k]) * &half)
    }

    /// Box shrunk inward by `fraction` of the width on each end; a
    /// degenerate axis stays degenerate.
    pub fn shrink(&self, fraction: &Scalar) -> Self {
        let lo = std::array::from_fn(|k| {
            &self.lo[k] + &((&self.hi[k] - &self.lo[k]) * fraction)
        });
        let hi = std::array::from_fn(|k| {
            &self.hi[k] - &((&self.hi[k] - &self.lo[k]) * fraction)
        });
        Self { lo, hi }
    }

    pub fn contains(&self, point: &Point4) -> bool {
        (0..4).all(|k| self.lo[k] <= point[k] && point[k] <= self.hi[k])
    }

    /// `count` quasi-random points from the Halton sequence in bases
    /// 2, 3, 5, 7, scaled into the box. The points are exact rationals
    /// and the sequence is fully determined by `seed`, which offsets the
    /// starting index.
    pub fn sample(&self, count: usize, seed: u64) -> Vec<Point4> {
        (0..count)
            .map(|i| {
                let index = seed + i as u64 + 1;
                std::array::from_fn(|k| {
                    let u = halton(index, HALTON_BASES[k]);
                    &self.lo[k] + &((&self.hi[k] - &self.lo[k]) * &u)
                })
            })
            .collect()
    }
}

/// Radical-inverse of `index` in the given base, as an exact rational
/// in (0, 1) for `index >= 1`.
fn halton(mut index: u64, base: u64) -> Scalar {
    let base_scalar = Scalar::from_integer(base.into());
    let mut value = Scalar::zero();
    let mut scale = Scalar::one() / &base_scalar;
    while index > 0 {
        let digit = index % base;
        value += &scale * &Scalar::from_integer(digit.into());
        scale /= &base_scalar;
        index /= base;
    }
    value
}
