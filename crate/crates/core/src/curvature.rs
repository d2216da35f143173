//! Finite-difference curvature of a sampled 4-dimensional metric, up to
//! the Weyl tensor.
//!
//! All derivatives are second-order central differences with a single
//! step size: metric first derivatives feed the Christoffel symbols, and
//! the symbols are differenced again for the Riemann tensor. The Weyl
//! tensor is assembled with the dimension-4 coefficients 1/2 and 1/6; it
//! vanishes (up to truncation error) exactly when the metric is locally
//! conformally flat.

use nalgebra::Matrix4;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CurvatureError {
    #[error("sampled metric is singular or not finite")]
    SingularMetric,
}

type Christoffel = [[[f64; 4]; 4]; 4];

fn finite_inverse(g: &Matrix4<f64>) -> Result<Matrix4<f64>, CurvatureError> {
    if !g.iter().all(|v| v.is_finite()) {
        return Err(CurvatureError::SingularMetric);
    }
    g.try_inverse().ok_or(CurvatureError::SingularMetric)
}

/// Christoffel symbols of the second kind at `point`,
/// `gamma[k][i][j] = 1/2 g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij})`.
#[allow(clippy::needless_range_loop)] // index loops mirror the tensor formulas
fn christoffel<F>(metric: &F, point: &[f64; 4], step: f64) -> Result<Christoffel, CurvatureError>
where
    F: Fn(&[f64; 4]) -> Matrix4<f64>,
{
    let ginv = finite_inverse(&metric(point))?;
    // dg[i] = d_i g
    let mut dg = [Matrix4::zeros(); 4];
    for i in 0..4 {
        let mut forward = *point;
        forward[i] += step;
        let mut backward = *point;
        backward[i] -= step;
        dg[i] = (metric(&forward) - metric(&backward)) / (2.0 * step);
    }
    let mut gamma = [[[0.0; 4]; 4]; 4];
    for k in 0..4 {
        for i in 0..4 {
            for j in 0..4 {
                let mut sum = 0.0;
                for l in 0..4 {
                    sum += ginv[(k, l)] * (dg[i][(j, l)] + dg[j][(i, l)] - dg[l][(i, j)]);
                }
                gamma[k][i][j] = 0.5 * sum;
            }
        }
    }
    Ok(gamma)
}

/// Largest absolute component of the Weyl tensor of the sampled metric,
/// computed by central finite differences with the given step.
#[allow(clippy::needless_range_loop)] // index loops mirror the tensor formulas
pub fn weyl_numeric<F>(metric: &F, point: &[f64; 4], step: f64) -> Result<f64, CurvatureError>
where
    F: Fn(&[f64; 4]) -> Matrix4<f64>,
{
    assert!(step > 0.0, "step must be positive");
    let g = metric(point);
    let ginv = finite_inverse(&g)?;
    let gamma = christoffel(metric, point, step)?;

    // dgamma[mu][k][i][j] = d_mu gamma^k_{ij}
    let mut dgamma = [[[[0.0; 4]; 4]; 4]; 4];
    for mu in 0..4 {
        let mut forward = *point;
        forward[mu] += step;
        let mut backward = *point;
        backward[mu] -= step;
        let gf = christoffel(metric, &forward, step)?;
        let gb = christoffel(metric, &backward, step)?;
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    dgamma[mu][k][i][j] = (gf[k][i][j] - gb[k][i][j]) / (2.0 * step);
                }
            }
        }
    }

    // Riemann with one index up:
    // R^r_{s mu nu} = d_mu gamma^r_{nu s} - d_nu gamma^r_{mu s}
    //                 + gamma^r_{mu l} gamma^l_{nu s} - gamma^r_{nu l} gamma^l_{mu s}
    let mut riemann_up = [[[[0.0; 4]; 4]; 4]; 4];
    for r in 0..4 {
        for s in 0..4 {
            for mu in 0..4 {
                for nu in 0..4 {
                    let mut value = dgamma[mu][r][nu][s] - dgamma[nu][r][mu][s];
                    for l in 0..4 {
                        value += gamma[r][mu][l] * gamma[l][nu][s]
                            - gamma[r][nu][l] * gamma[l][mu][s];
                    }
                    riemann_up[r][s][mu][nu] = value;
                }
            }
        }
    }

    // lower the first index
    let mut riemann = [[[[0.0; 4]; 4]; 4]; 4];
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let mut value = 0.0;
                    for l in 0..4 {
                        value += g[(a, l)] * riemann_up[l][b][c][d];
                    }
                    riemann[a][b][c][d] = value;
                }
            }
        }
    }

    // Ricci and scalar curvature
    let mut ricci = Matrix4::<f64>::zeros();
    for s in 0..4 {
        for nu in 0..4 {
            let mut value = 0.0;
            for mu in 0..4 {
                value += riemann_up[mu][s][mu][nu];
            }
            ricci[(s, nu)] = value;
        }
    }
    let mut scalar = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            scalar += ginv[(a, b)] * ricci[(a, b)];
        }
    }

    // Weyl, dimension 4:
    // C_abcd = R_abcd - 1/2 (g_ac R_db - g_ad R_cb - g_bc R_da + g_bd R_ca)
    //          + R/6 (g_ac g_db - g_ad g_cb)
    let mut max_abs: f64 = 0.0;
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let value = riemann[a][b][c][d]
                        - 0.5
                            * (g[(a, c)] * ricci[(d, b)] - g[(a, d)] * ricci[(c, b)]
                                - g[(b, c)] * ricci[(d, a)]
                                + g[(b, d)] * ricci[(c, a)])
                        + scalar / 6.0 * (g[(a, c)] * g[(d, b)] - g[(a, d)] * g[(c, b)]);
                    max_abs = max_abs.max(value.abs());
                }
            }
        }
    }
    if !max_abs.is_finite() {
        return Err(CurvatureError::SingularMetric);
    }
    Ok(max_abs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flat_norden(_: &[f64; 4]) -> Matrix4<f64> {
        Matrix4::from_diagonal(&nalgebra::Vector4::new(-1.0, -1.0, 1.0, 1.0))
    }

    #[test]
    fn flat_metric_has_zero_weyl() {
        let w = weyl_numeric(&flat_norden, &[0.3, -0.2, 0.0, 1.4], 1e-3).unwrap();
        assert!(w < 1e-12, "weyl = {w}");
    }

    #[test]
    fn conformally_flat_metric_has_tiny_weyl() {
        // g = h G with a smooth positive conformal factor
        let metric = |p: &[f64; 4]| {
            let h = 1.0 + 0.25 * p[0] * p[0] + 0.1 * p[1] * p[2] + 0.2 * p[3] * p[3];
            flat_norden(p) * h
        };
        let w = weyl_numeric(&metric, &[0.2, 0.1, -0.3, 0.4], 1e-3).unwrap();
        assert!(w < 1e-6, "weyl = {w}");
    }

    #[test]
    fn singular_metric_is_reported() {
        let metric = |_: &[f64; 4]| Matrix4::<f64>::zeros();
        assert_eq!(
            weyl_numeric(&metric, &[0.0; 4], 1e-3),
            Err(CurvatureError::SingularMetric)
        );
        let nan_metric = |_: &[f64; 4]| Matrix4::<f64>::from_element(f64::NAN);
        assert_eq!(
            weyl_numeric(&nan_metric, &[0.0; 4], 1e-3),
            Err(CurvatureError::SingularMetric)
        );
    }

    #[test]
    fn curved_control_metric_has_visible_weyl() {
        // diag(-1, -1, 1, 1 + x0^2): not conformally flat; the exact value
        // at x0 = 1/2 is 4/15 (fixed independently by a symbolic check).
        let metric = |p: &[f64; 4]| {
            Matrix4::from_diagonal(&nalgebra::Vector4::new(-1.0, -1.0, 1.0, 1.0 + p[0] * p[0]))
        };
        let w = weyl_numeric(&metric, &[0.5, 0.0, 0.0, 0.0], 1e-4).unwrap();
        assert!((w - 4.0 / 15.0).abs() < 1e-5, "weyl = {w}");
    }
}
