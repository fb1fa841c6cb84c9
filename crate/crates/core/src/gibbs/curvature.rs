//! Scalar curvature of a two-dimensional Hessian metric.
//!
//! Sign convention: the round two-sphere of radius `a` has `R = 2/a²`. With it,
//! the classical ideal gas is flat, Fermi-Dirac gases are negatively curved and
//! Bose-Einstein gases without the ground-state term positively curved.

use super::coords::LagrangeCoords;
use super::diff::{axis_steps, check_step, partial, probe};
use super::field::MetricField;
use super::metric::{MetricTensor2, DEGENERACY_RATIO};
use crate::error::{Error, Result};

/// A metric together with its first partial derivatives at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricJet {
    pub metric: MetricTensor2,
    /// `∂g/∂λ¹` as `(∂₁g11, ∂₁g12, ∂₁g22)`.
    pub d1: [f64; 3],
    /// `∂g/∂λ²` as `(∂₂g11, ∂₂g12, ∂₂g22)`.
    pub d2: [f64; 3],
}

impl MetricJet {
    /// `∂_σ g_{μν}` with zero-based indices.
    pub fn dg(&self, sigma: usize, mu: usize, nu: usize) -> f64 {
        let d = if sigma == 0 { &self.d1 } else { &self.d2 };
        match (mu, nu) {
            (0, 0) => d[0],
            (0, 1) | (1, 0) => d[1],
            _ => d[2],
        }
    }

    /// Largest violation of the Hessian-metric symmetry `∂₁g12 = ∂₂g11`,
    /// `∂₁g22 = ∂₂g12`, relative to the derivative scale.
    pub fn hessian_asymmetry(&self) -> f64 {
        let scale = self
            .d1
            .iter()
            .chain(self.d2.iter())
            .fold(0.0f64, |m, v| m.max(v.abs()));
        let a = (self.d1[1] - self.d2[0]).abs();
        let b = (self.d1[2] - self.d2[1]).abs();
        a.max(b) / scale.max(f64::MIN_POSITIVE)
    }
}

/// Metric and its first derivatives by extrapolated central differences.
pub fn metric_jet(field: &impl MetricField, at: LagrangeCoords, step: f64) -> Result<MetricJet> {
    check_step(step)?;
    let domain = field.domain();
    let f = |p: LagrangeCoords| field.metric(p).map(|g| g.as_array());
    let metric = probe(&domain, at, &|p| field.metric(p))?;
    let [h1, h2] = axis_steps(at, step);
    let d1 = partial(&domain, at, 0, h1, &f)?;
    let d2 = partial(&domain, at, 1, h2, &f)?;
    Ok(MetricJet { metric, d1, d2 })
}

fn check_metric(g: &MetricTensor2) -> Result<f64> {
    let det = g.det();
    if !(det > 0.0) || !(g.g11 > 0.0) {
        return Err(Error::SingularMetric { det });
    }
    let threshold = DEGENERACY_RATIO * g.g11 * g.g22;
    if det < threshold {
        return Err(Error::IllConditioned { det, threshold });
    }
    Ok(det)
}

/// `R = -1/(2 g²) · det[[g11, g12, g22], [∂₁g11, ∂₁g12, ∂₁g22], [∂₂g11, ∂₂g12, ∂₂g22]]`.
pub fn curvature_from_jet_det(jet: &MetricJet) -> Result<f64> {
    let g = jet.metric;
    let det_g = check_metric(&g)?;
    let rows = [g.as_array(), jet.d1, jet.d2];
    Ok(-det3(&rows) / (2.0 * det_g * det_g))
}

/// Christoffel symbols of the first kind, `Γ_{σμν} = ½ ∂_σ g_{μν}`, valid for
/// Hessian metrics; then the Riemann tensor
/// `R_{μνσυ} = g^{οϖ} (Γ_{ομυ} Γ_{ϖνσ} - Γ_{ομσ} Γ_{ϖνυ})` and the full
/// contraction `R = g^{νυ} g^{μσ} R_{μνσυ}`.
pub fn curvature_from_jet_riemann(jet: &MetricJet) -> Result<f64> {
    let g = jet.metric;
    check_metric(&g)?;
    let inv = g.inverse().ok_or(Error::SingularMetric { det: g.det() })?;
    let ginv = |i: usize, j: usize| inv.get(i, j);

    let mut christoffel = [[[0.0; 2]; 2]; 2];
    for (s, plane) in christoffel.iter_mut().enumerate() {
        for (m, row) in plane.iter_mut().enumerate() {
            for (n, c) in row.iter_mut().enumerate() {
                *c = 0.5 * jet.dg(s, m, n);
            }
        }
    }
    let gam = |s: usize, m: usize, n: usize| christoffel[s][m][n];

    let riemann = |mu: usize, nu: usize, sg: usize, up: usize| -> f64 {
        let mut acc = 0.0;
        for o in 0..2 {
            for w in 0..2 {
                acc += ginv(o, w) * (gam(o, mu, up) * gam(w, nu, sg) - gam(o, mu, sg) * gam(w, nu, up));
            }
        }
        acc
    };

    let mut r = 0.0;
    for mu in 0..2 {
        for nu in 0..2 {
            for sg in 0..2 {
                for up in 0..2 {
                    r += ginv(nu, up) * ginv(mu, sg) * riemann(mu, nu, sg, up);
                }
            }
        }
    }
    Ok(r)
}

/// Scalar curvature from the 3x3 determinant formula with numerically
/// differentiated metric entries.
pub fn scalar_curvature_det(field: &impl MetricField, at: LagrangeCoords, step: f64) -> Result<f64> {
    curvature_from_jet_det(&metric_jet(field, at, step)?)
}

/// Scalar curvature through Christoffel symbols and the Riemann tensor.
pub fn scalar_curvature_riemann(
    field: &impl MetricField,
    at: LagrangeCoords,
    step: f64,
) -> Result<f64> {
    curvature_from_jet_riemann(&metric_jet(field, at, step)?)
}

/// 3x3 determinant by cofactor expansion along the column with the largest
/// entry magnitude.
pub fn det3(m: &[[f64; 3]; 3]) -> f64 {
    let col = (0..3)
        .max_by(|&a, &b| {
            let ma = (0..3).fold(0.0f64, |acc, r| acc.max(m[r][a].abs()));
            let mb = (0..3).fold(0.0f64, |acc, r| acc.max(m[r][b].abs()));
            ma.total_cmp(&mb)
        })
        .unwrap_or(0);
    let others: Vec<usize> = (0..3).filter(|&c| c != col).collect();
    let mut acc = 0.0;
    for row in 0..3 {
        let rows: Vec<usize> = (0..3).filter(|&r| r != row).collect();
        let minor = m[rows[0]][others[0]] * m[rows[1]][others[1]]
            - m[rows[0]][others[1]] * m[rows[1]][others[0]];
        let sign = if (row + col) % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * m[row][col] * minor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gibbs::coords::Domain;
    use crate::gibbs::field::FnMetric;

    #[test]
    fn det3_matches_rule_of_sarrus() {
        let m = [[2.0, -1.0, 0.5], [3.0, 4.0, -2.0], [1.0, 0.25, 7.0]];
        let sarrus = m[0][0] * m[1][1] * m[2][2] + m[0][1] * m[1][2] * m[2][0] + m[0][2] * m[1][0] * m[2][1]
            - m[0][2] * m[1][1] * m[2][0]
            - m[0][0] * m[1][2] * m[2][1]
            - m[0][1] * m[1][0] * m[2][2];
        assert!((det3(&m) - sarrus).abs() < 1e-12);
    }

    #[test]
    fn constant_metric_is_flat() {
        let field = FnMetric::new(Domain::POSITIVE_BETA, |_| Ok(MetricTensor2::new(2.0, 0.3, 1.5)));
        let at = LagrangeCoords::new(1.0, 0.2);
        assert_eq!(scalar_curvature_det(&field, at, 1e-3).unwrap(), 0.0);
        assert_eq!(scalar_curvature_riemann(&field, at, 1e-3).unwrap(), 0.0);
    }

    #[test]
    fn formulas_agree_on_a_symmetric_jet() {
        let jet = MetricJet {
            metric: MetricTensor2::new(2.0, 1.0, 2.0),
            d1: [2.0, 1.0, 1.0],
            d2: [1.0, 1.0, 2.0],
        };
        let a = curvature_from_jet_det(&jet).unwrap();
        let b = curvature_from_jet_riemann(&jet).unwrap();
        assert!((a - b).abs() < 1e-14, "{a} vs {b}");
    }

    /// Normal family in natural parameters: log Z = -θ₁²/(4θ₂) - ½ ln(-2θ₂), mapped
    /// to θ₁ = λ², θ₂ = -β. Its Fisher metric is hyperbolic with R = -1.
    fn gaussian_family() -> impl MetricField {
        FnMetric::new(Domain::POSITIVE_BETA, |p: LagrangeCoords| {
            let (t1, t2) = (p.lambda2, -p.beta);
            let psi11 = -1.0 / (2.0 * t2);
            let psi12 = t1 / (2.0 * t2 * t2);
            let psi22 = -t1 * t1 / (2.0 * t2 * t2 * t2) + 1.0 / (2.0 * t2 * t2);
            Ok(MetricTensor2::new(psi22, -psi12, psi11))
        })
    }

    #[test]
    fn gaussian_family_has_curvature_minus_one() {
        let field = gaussian_family();
        for (beta, l2) in [(0.5, 0.0), (1.0, 1.5), (2.5, -0.7)] {
            let at = LagrangeCoords::new(beta, l2);
            let a = scalar_curvature_det(&field, at, 1e-3).unwrap();
            let b = scalar_curvature_riemann(&field, at, 1e-3).unwrap();
            assert!((a + 1.0).abs() < 1e-8, "det route: {a}");
            assert!((b + 1.0).abs() < 1e-8, "riemann route: {b}");
        }
    }

    #[test]
    fn singular_metric_is_rejected() {
        let jet = MetricJet {
            metric: MetricTensor2::new(1.0, 1.0, 1.0),
            d1: [0.0; 3],
            d2: [0.0; 3],
        };
        assert!(matches!(curvature_from_jet_det(&jet), Err(Error::SingularMetric { .. })));
        assert!(matches!(curvature_from_jet_riemann(&jet), Err(Error::SingularMetric { .. })));
    }
}
