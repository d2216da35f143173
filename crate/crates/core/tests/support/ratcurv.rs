//! Exact symbolic curvature oracle for diagonal polynomial metrics.
//!
//! Independent of the finite-difference route: derivatives are formal,
//! the metric inverse is exact, and every Weyl component comes out as a
//! rational function that can be tested for identical vanishing or
//! evaluated exactly at a rational point. Intended for univariate test
//! metrics, where the unreduced denominators stay small.

use num_traits::Signed;
use pqk_core::scalar::ratio;
use pqk_core::{Poly4, Scalar};

/// Quotient of polynomials, kept unreduced.
#[derive(Clone, Debug)]
pub struct RatFun {
    num: Poly4,
    den: Poly4,
}

impl RatFun {
    fn new(num: Poly4, den: Poly4) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self {
                num,
                den: Poly4::one(),
            };
        }
        Self { num, den }
    }

    pub fn zero() -> Self {
        Self::new(Poly4::zero(), Poly4::one())
    }

    pub fn from_poly(p: &Poly4) -> Self {
        Self::new(p.clone(), Poly4::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.num, self.den.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.num.is_zero(), "division by zero rational function");
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, factor: &Scalar) -> Self {
        Self::new(self.num.scale(factor), self.den.clone())
    }

    /// Formal partial derivative `(n' d - n d') / d^2`.
    pub fn partial(&self, axis: usize) -> Self {
        Self::new(
            &(&self.num.partial(axis) * &self.den) - &(&self.num * &self.den.partial(axis)),
            &self.den * &self.den,
        )
    }

    pub fn eval(&self, point: &[Scalar; 4]) -> Scalar {
        self.num.eval(point) / self.den.eval(point)
    }
}

/// All 256 Weyl components as exact rational functions.
pub struct ExactWeyl {
    components: Vec<RatFun>,
}

impl ExactWeyl {
    pub fn is_identically_zero(&self) -> bool {
        self.components.iter().all(RatFun::is_zero)
    }

    pub fn max_abs_at(&self, point: &[Scalar; 4]) -> Scalar {
        let mut max = ratio(0, 1);
        for c in &self.components {
            let v = c.eval(point).abs();
            if v > max {
                max = v;
            }
        }
        max
    }
}

/// Symbolic Christoffel/Riemann/Ricci/Weyl chain for the diagonal metric
/// `g = diag(diag[0], .., diag[3])`, dimension-4 Weyl coefficients 1/2
/// and 1/6.
#[allow(clippy::needless_range_loop)] // index loops mirror the tensor formulas
pub fn weyl_exact_diag(diag: &[Poly4; 4]) -> ExactWeyl {
    let zero = RatFun::zero;
    let g: Vec<Vec<RatFun>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        RatFun::from_poly(&diag[i])
                    } else {
                        zero()
                    }
                })
                .collect()
        })
        .collect();
    let ginv: Vec<Vec<RatFun>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        RatFun::from_poly(&Poly4::one()).div(&g[i][i])
                    } else {
                        zero()
                    }
                })
                .collect()
        })
        .collect();

    // Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)
    let half = ratio(1, 2);
    let mut gamma = vec![vec![vec![zero(); 4]; 4]; 4];
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                let mut sum = zero();
                for l in 0..4 {
                    if ginv[k][l].is_zero() {
                        continue;
                    }
                    let inner = g[j][l]
                        .partial(i)
                        .add(&g[i][l].partial(j))
                        .sub(&g[i][j].partial(l));
                    sum = sum.add(&ginv[k][l].mul(&inner));
                }
                gamma[k][i][j] = sum.scale(&half);
            }
        }
    }

    // R^r_{s mu nu} = d_mu Gamma^r_{nu s} - d_nu Gamma^r_{mu s}
    //                 + Gamma^r_{mu l} Gamma^l_{nu s} - Gamma^r_{nu l} Gamma^l_{mu s}
    let mut riemann_up = vec![vec![vec![vec![zero(); 4]; 4]; 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            for mu in 0..4 {
                for nu in 0..4 {
                    let mut value = gamma[r][nu][s]
                        .partial(mu)
                        .sub(&gamma[r][mu][s].partial(nu));
                    for l in 0..4 {
                        value = value
                            .add(&gamma[r][mu][l].mul(&gamma[l][nu][s]))
                            .sub(&gamma[r][nu][l].mul(&gamma[l][mu][s]));
                    }
                    riemann_up[r][s][mu][nu] = value;
                }
            }
        }
    }

    let mut riemann = vec![vec![vec![vec![zero(); 4]; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    // diagonal metric: only l = a contributes
                    riemann[a][b][c][d] = g[a][a].mul(&riemann_up[a][b][c][d]);
                }
            }
        }
    }

    let mut ricci = vec![vec![zero(); 4]; 4];
    for s in 0..4 {
        for nu in 0..4 {
            let mut value = zero();
            for mu in 0..4 {
                value = value.add(&riemann_up[mu][s][mu][nu]);
            }
            ricci[s][nu] = value;
        }
    }

    let mut scalar = zero();
    for a in 0..4 {
        scalar = scalar.add(&ginv[a][a].mul(&ricci[a][a]));
    }

    let sixth = ratio(1, 6);
    let minus_half = ratio(-1, 2);
    let mut components = Vec::with_capacity(256);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let ricci_part = g[a][c]
                        .mul(&ricci[d][b])
                        .sub(&g[a][d].mul(&ricci[c][b]))
                        .sub(&g[b][c].mul(&ricci[d][a]))
                        .add(&g[b][d].mul(&ricci[c][a]))
                        .scale(&minus_half);
                    let scalar_part = scalar
                        .mul(&g[a][c].mul(&g[d][b]).sub(&g[a][d].mul(&g[c][b])))
                        .scale(&sixth);
                    components.push(riemann[a][b][c][d].add(&ricci_part).add(&scalar_part));
                }
            }
        }
    }
    ExactWeyl { components }
}
