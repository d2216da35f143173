//! Cauchy-Fueter operators, regularity checks, and generators of regular
//! polynomial maps.
//!
//! The two operators act on maps `f = f0 + sum_a f^a i_a` by
//!
//! ```text
//! D_L f = d0 f + i1 (d1 f) + i2 (d2 f) + i3 (d3 f)      (basis on the left)
//! D_R f = d0 f + (d1 f) i1 + (d2 f) i2 + (d3 f) i3      (basis on the right)
//! ```
//!
//! A map is left-regular when `D_L f = 0` and right-regular when
//! `D_R f = 0`; both conditions are decided exactly as polynomial
//! identities. The real parts of `D_L f` and `D_R f` always agree.
//!
//! Regular maps are generated from the degree-one building blocks
//! `zeta_a(x) = x^a - x0 i_a`, which are regular on both sides. Products
//! of several `zeta`s are *not* regular on their own; regularity of a
//! degree-k generator requires the symmetrized product (the average of
//! the products over all orderings of the chosen indices). `fueter_sum`
//! therefore symmetrizes each term before applying its one-sided
//! coefficient: coefficients multiply on the right for left-regular
//! generators and on the left for right-regular ones.

use crate::algebra::Paraquaternion;
use crate::map::PolyMap;
use crate::poly::Poly4;
use crate::scalar::{ratio, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Which side the defining operator applies its basis factors on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Outcome of a regularity check: either exactly regular, or the nonzero
/// residual map, whose components identify the failing equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    Regular,
    Residual(PolyMap),
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular)
    }

    pub fn residual(&self) -> Option<&PolyMap> {
        match self {
            Regularity::Regular => None,
            Regularity::Residual(r) => Some(r),
        }
    }
}

/// Errors from assembling generator sums.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FueterError {
    #[error("generator term has an empty index sequence")]
    EmptyIndices,
    #[error("generator index {0} is outside 1..=3")]
    BadIndex(u8),
    #[error("generator terms mix left and right sides")]
    MixedSides,
}

/// `D_L f`, with components given by the expanded 4-component formula.
pub fn d_left(f: &PolyMap) -> PolyMap {
    let d = |j: usize, k: usize| f.component(k).partial(j);
    PolyMap {
        f0: &(&d(0, 0) - &d(1, 1)) + &(&d(2, 2) + &d(3, 3)),
        f1: &(&d(1, 0) + &d(0, 1)) + &(&d(3, 2) - &d(2, 3)),
        f2: &(&d(2, 0) + &d(3, 1)) + &(&d(0, 2) - &d(1, 3)),
        f3: &(&d(3, 0) - &d(2, 1)) + &(&d(1, 2) + &d(0, 3)),
    }
}

/// `D_R f`; relative to `D_L`, the cross terms in the `f2`/`f3` slots
/// flip sign while the real part is unchanged.
pub fn d_right(f: &PolyMap) -> PolyMap {
    let d = |j: usize, k: usize| f.component(k).partial(j);
    PolyMap {
        f0: &(&d(0, 0) - &d(1, 1)) + &(&d(2, 2) + &d(3, 3)),
        f1: &(&d(1, 0) + &d(0, 1)) + &(&d(2, 3) - &d(3, 2)),
        f2: &(&d(2, 0) - &d(3, 1)) + &(&d(0, 2) + &d(1, 3)),
        f3: &(&d(3, 0) + &d(2, 1)) + &(&d(0, 3) - &d(1, 2)),
    }
}

/// `D_L f - D_R f`, computed from its closed form
/// `2(d3 f2 - d2 f3) i1 + 2(d3 f1 - d1 f3) i2 + 2(d1 f2 - d2 f1) i3`.
/// The real part is identically zero.
pub fn lr_difference(f: &PolyMap) -> PolyMap {
    let two = Scalar::from_integer(2.into());
    PolyMap {
        f0: Poly4::zero(),
        f1: (&f.f2.partial(3) - &f.f3.partial(2)).scale(&two),
        f2: (&f.f1.partial(3) - &f.f3.partial(1)).scale(&two),
        f3: (&f.f2.partial(1) - &f.f1.partial(2)).scale(&two),
    }
}

pub fn left_regularity(f: &PolyMap) -> Regularity {
    let residual = d_left(f);
    if residual.is_zero() {
        Regularity::Regular
    } else {
        Regularity::Residual(residual)
    }
}

pub fn right_regularity(f: &PolyMap) -> Regularity {
    let residual = d_right(f);
    if residual.is_zero() {
        Regularity::Regular
    } else {
        Regularity::Residual(residual)
    }
}

pub fn regularity(f: &PolyMap, side: Side) -> Regularity {
    match side {
        Side::Left => left_regularity(f),
        Side::Right => right_regularity(f),
    }
}

/// The degree-one generator `zeta_alpha(x) = x^alpha - x0 i_alpha`,
/// regular on both sides. Panics unless `alpha` is 1..=3.
pub fn zeta(alpha: u8) -> PolyMap {
    assert!((1..=3).contains(&alpha), "zeta index out of range: {alpha}");
    let mut f = PolyMap::zero();
    f.f0 = Poly4::coordinate(alpha as usize);
    let minus_x0 = -&Poly4::coordinate(0);
    match alpha {
        1 => f.f1 = minus_x0,
        2 => f.f2 = minus_x0,
        _ => f.f3 = minus_x0,
    }
    f
}

/// One term of a generator sum: an index sequence over `{1,2,3}`, a
/// constant coefficient, and the side it generates for. The coefficient
/// multiplies the symmetrized `zeta` product on the right for
/// `Side::Left` and on the left for `Side::Right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FueterTerm {
    indices: Vec<u8>,
    coefficient: Paraquaternion,
    side: Side,
}

impl FueterTerm {
    /// Validates the index sequence: nonempty, entries in `1..=3`.
    /// Constants are not expressible as terms; add them separately via
    /// `PolyMap::constant`.
    pub fn new(
        side: Side,
        indices: Vec<u8>,
        coefficient: Paraquaternion,
    ) -> Result<Self, FueterError> {
        if indices.is_empty() {
            return Err(FueterError::EmptyIndices);
        }
        if let Some(&bad) = indices.iter().find(|i| !(1..=3).contains(*i)) {
            return Err(FueterError::BadIndex(bad));
        }
        Ok(Self {
            indices,
            coefficient,
            side,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn indices(&self) -> &[u8] {
        &self.indices
    }

    pub fn coefficient(&self) -> &Paraquaternion {
        &self.coefficient
    }
}

/// Plain left-to-right product of the `zeta`s named by `indices`.
fn zeta_product(indices: &[u8]) -> PolyMap {
    let mut acc = zeta(indices[0]);
    for &alpha in &indices[1..] {
        acc = acc.pointwise_mul(&zeta(alpha));
    }
    acc
}

/// Average of the `zeta` products over all distinct orderings of the
/// index multiset. For a single index this is just that `zeta`.
pub fn symmetrized_zeta_product(indices: &[u8]) -> PolyMap {
    let orders = distinct_orderings(indices);
    let mut acc = PolyMap::zero();
    for order in &orders {
        acc = &acc + &zeta_product(order);
    }
    acc.scale(&ratio(1, orders.len() as i64))
}

fn distinct_orderings(indices: &[u8]) -> Vec<Vec<u8>> {
    let mut counts: BTreeMap<u8, usize> = BTreeMap::new();
    for &i in indices {
        *counts.entry(i).or_default() += 1;
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(indices.len());
    fn recurse(
        counts: &mut BTreeMap<u8, usize>,
        prefix: &mut Vec<u8>,
        len: usize,
        out: &mut Vec<Vec<u8>>,
    ) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        let keys: Vec<u8> = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&k, _)| k)
            .collect();
        for k in keys {
            *counts.get_mut(&k).unwrap() -= 1;
            prefix.push(k);
            recurse(counts, prefix, len, out);
            prefix.pop();
            *counts.get_mut(&k).unwrap() += 1;
        }
    }
    recurse(&mut counts, &mut prefix, indices.len(), &mut out);
    out
}

/// Sum of generator terms. All terms must carry the same side tag; the
/// result is exactly regular on that side.
pub fn fueter_sum(terms: &[FueterTerm]) -> Result<PolyMap, FueterError> {
    if let Some(first) = terms.first() {
        if terms.iter().any(|t| t.side != first.side) {
            return Err(FueterError::MixedSides);
        }
    }
    let mut acc = PolyMap::zero();
    for term in terms {
        let product = symmetrized_zeta_product(&term.indices);
        let coefficient = PolyMap::constant(&term.coefficient);
        let contribution = match term.side {
            Side::Left => product.pointwise_mul(&coefficient),
            Side::Right => coefficient.pointwise_mul(&product),
        };
        acc = &acc + &contribution;
    }
    Ok(acc)
}

/// The map with real part `f0` and imaginary components `d_alpha F` for a
/// scalar potential `F`. Such maps satisfy `D_L f = D_R f` identically,
/// because mixed partials of `F` commute.
pub fn from_potential(f0: Poly4, potential: Poly4) -> PolyMap {
    PolyMap {
        f0,
        f1: potential.partial(1),
        f2: potential.partial(2),
        f3: potential.partial(3),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::testutil::{
        rand_fueter_terms, rand_map, rand_pq, rand_poly, rng_with_seed,
    };

    fn x(axis: usize) -> Poly4 {
        Poly4::coordinate(axis)
    }

    /// Independent route for the operators: apply the pointwise algebra
    /// product with constant basis maps instead of the expanded
    /// component formulas.
    fn d_left_by_definition(f: &PolyMap) -> PolyMap {
        let mut acc = f.partial(0);
        for alpha in 1..=3u8 {
            let basis = PolyMap::constant(&Paraquaternion::basis(alpha as usize));
            acc = &acc + &basis.pointwise_mul(&f.partial(alpha as usize));
        }
        acc
    }

    fn d_right_by_definition(f: &PolyMap) -> PolyMap {
        let mut acc = f.partial(0);
        for alpha in 1..=3u8 {
            let basis = PolyMap::constant(&Paraquaternion::basis(alpha as usize));
            acc = &acc + &f.partial(alpha as usize).pointwise_mul(&basis);
        }
        acc
    }

    #[test]
    fn operators_match_their_definitions() {
        let mut r = rng_with_seed(21);
        for _ in 0..50 {
            let f = rand_map(&mut r, 4);
            assert_eq!(d_left(&f), d_left_by_definition(&f));
            assert_eq!(d_right(&f), d_right_by_definition(&f));
        }
    }

    #[test]
    fn d_left_examples() {
        assert!(d_left(&zeta(1)).is_zero());
        let c = PolyMap::constant(&rand_pq(&mut rng_with_seed(3)));
        assert!(d_left(&c).is_zero());
        // f = x0 * i1 has D_L f = i1
        let f = PolyMap::new(Poly4::zero(), x(0), Poly4::zero(), Poly4::zero());
        assert_eq!(
            d_left(&f),
            PolyMap::constant(&Paraquaternion::i1())
        );
    }

    #[test]
    fn d_right_examples() {
        assert!(d_right(&zeta(2)).is_zero());
        // f = x1 * i1 has D_R f = i1 * i1 = -1
        let f = PolyMap::new(Poly4::zero(), x(1), Poly4::zero(), Poly4::zero());
        assert_eq!(
            d_right(&f),
            PolyMap::constant(&Paraquaternion::from_real(int(-1)))
        );
    }

    #[test]
    fn zetas_are_regular_on_both_sides() {
        for alpha in 1..=3 {
            assert!(left_regularity(&zeta(alpha)).is_regular());
            assert!(right_regularity(&zeta(alpha)).is_regular());
        }
    }

    #[test]
    fn lr_difference_examples() {
        // real-only maps have zero difference
        let f = PolyMap::new(rand_poly(&mut rng_with_seed(5), 4, 4), Poly4::zero(), Poly4::zero(), Poly4::zero());
        assert!(lr_difference(&f).is_zero());
        // f = x2 * i3: d2 f3 = 1, so the difference is -2 i1
        let f = PolyMap::new(Poly4::zero(), Poly4::zero(), Poly4::zero(), x(2));
        assert_eq!(
            lr_difference(&f),
            PolyMap::constant(&Paraquaternion::new(int(0), int(-2), int(0), int(0)))
        );
    }

    #[test]
    fn lr_difference_equals_operator_difference() {
        let mut r = rng_with_seed(9);
        for _ in 0..100 {
            let f = rand_map(&mut r, 4);
            assert_eq!(lr_difference(&f), &d_left(&f) - &d_right(&f));
        }
    }

    #[test]
    fn operators_are_linear() {
        let mut r = rng_with_seed(13);
        for _ in 0..200 {
            let f = rand_map(&mut r, 4);
            let g = rand_map(&mut r, 4);
            assert_eq!(d_left(&(&f + &g)), &d_left(&f) + &d_left(&g));
            assert_eq!(d_right(&(&f + &g)), &d_right(&f) + &d_right(&g));
        }
    }

    #[test]
    fn operators_commute() {
        let mut r = rng_with_seed(17);
        for _ in 0..200 {
            let f = rand_map(&mut r, 3);
            assert_eq!(d_left(&d_right(&f)), d_right(&d_left(&f)));
        }
    }

    #[test]
    fn real_parts_agree() {
        let mut r = rng_with_seed(19);
        for _ in 0..200 {
            let f = rand_map(&mut r, 4);
            assert_eq!(d_left(&f).f0, d_right(&f).f0);
        }
    }

    #[test]
    fn plain_zeta_products_are_not_regular() {
        // the motivating counterexample for symmetrization:
        // D_L(zeta1 * zeta2) = 2 x0 i3
        let plain = zeta(1).pointwise_mul(&zeta(2));
        let expect = PolyMap::new(
            Poly4::zero(),
            Poly4::zero(),
            Poly4::zero(),
            x(0).scale(&int(2)),
        );
        assert_eq!(d_left(&plain), expect);
    }

    #[test]
    fn symmetrized_products_are_regular() {
        // exhaustively over all index strings of length <= 3
        let mut strings = vec![];
        for a in 1..=3u8 {
            strings.push(vec![a]);
            for b in 1..=3u8 {
                strings.push(vec![a, b]);
                for c in 1..=3u8 {
                    strings.push(vec![a, b, c]);
                }
            }
        }
        for s in strings {
            let p = symmetrized_zeta_product(&s);
            assert!(left_regularity(&p).is_regular(), "left {s:?}");
            assert!(right_regularity(&p).is_regular(), "right {s:?}");
        }
    }

    #[test]
    fn fueter_sum_examples() {
        let term = FueterTerm::new(Side::Left, vec![1], Paraquaternion::one()).unwrap();
        assert_eq!(fueter_sum(&[term]).unwrap(), zeta(1));
        assert!(fueter_sum(&[]).unwrap().is_zero());
    }

    #[test]
    fn fueter_sum_random_terms_are_regular() {
        let mut r = rng_with_seed(23);
        for _ in 0..40 {
            let terms = rand_fueter_terms(&mut r, Side::Left, 4, 8);
            let f = fueter_sum(&terms).unwrap();
            assert!(left_regularity(&f).is_regular());
            let terms = rand_fueter_terms(&mut r, Side::Right, 4, 8);
            let f = fueter_sum(&terms).unwrap();
            assert!(right_regularity(&f).is_regular());
        }
    }

    #[test]
    fn fueter_sum_rejects_mixed_sides() {
        let l = FueterTerm::new(Side::Left, vec![1], Paraquaternion::one()).unwrap();
        let r = FueterTerm::new(Side::Right, vec![2], Paraquaternion::one()).unwrap();
        assert_eq!(fueter_sum(&[l, r]), Err(FueterError::MixedSides));
    }

    #[test]
    fn fueter_term_validation() {
        assert_eq!(
            FueterTerm::new(Side::Left, vec![], Paraquaternion::one()),
            Err(FueterError::EmptyIndices)
        );
        assert_eq!(
            FueterTerm::new(Side::Left, vec![1, 4], Paraquaternion::one()),
            Err(FueterError::BadIndex(4))
        );
    }

    #[test]
    fn from_potential_examples() {
        // F = x1*x2: f1 = x2, f2 = x1, f3 = 0
        let f = from_potential(Poly4::zero(), &x(1) * &x(2));
        assert_eq!(f.f1, x(2));
        assert_eq!(f.f2, x(1));
        assert!(f.f3.is_zero());
        assert!(lr_difference(&f).is_zero());
        assert_eq!(d_left(&f), d_right(&f));

        // F = 0: any real part gives zero difference
        let f = from_potential(rand_poly(&mut rng_with_seed(29), 3, 4), Poly4::zero());
        assert!(lr_difference(&f).is_zero());

        // F = x3^2: f3 = 2 x3
        let f = from_potential(Poly4::zero(), &x(3) * &x(3));
        assert_eq!(f.f3, x(3).scale(&int(2)));
        assert!(lr_difference(&f).is_zero());
    }

    #[test]
    fn lr_difference_vanishes_iff_curl_conditions_hold() {
        let mut r = rng_with_seed(31);
        for _ in 0..100 {
            let f = rand_map(&mut r, 3);
            let curl_zero = (&f.f2.partial(3) - &f.f3.partial(2)).is_zero()
                && (&f.f1.partial(3) - &f.f3.partial(1)).is_zero()
                && (&f.f2.partial(1) - &f.f1.partial(2)).is_zero();
            assert_eq!(lr_difference(&f).is_zero(), curl_zero);
        }
        // constructed positives
        for seed in 0..20 {
            let mut r = rng_with_seed(1000 + seed);
            let f = from_potential(rand_poly(&mut r, 2, 3), rand_poly(&mut r, 3, 4));
            assert!(lr_difference(&f).is_zero());
        }
    }
}
