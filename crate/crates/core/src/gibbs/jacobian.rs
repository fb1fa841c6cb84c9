use super::coords::{Domain, LagrangeCoords};
use super::diff::{axis_steps, check_step, partial, probe};
use super::hessian::HessianMetric;
use super::metric::MetricTensor2;
use crate::error::Result;

/// Expectation values `A_μ = ∂F/∂λ^μ` (mean energy and mean particle number)
/// as functions of the Lagrange coordinates.
pub trait ExpectationField: Sync {
    fn expectations(&self, at: LagrangeCoords) -> Result<[f64; 2]>;

    fn domain(&self) -> Domain {
        Domain::POSITIVE_BETA
    }
}

/// `g_{μν} = -∂A_μ/∂λ^ν` by extrapolated central differences.
///
/// The two off-diagonal estimates are averaged; for a true Gibbs family they agree.
pub fn jacobian_metric(
    field: &impl ExpectationField,
    at: LagrangeCoords,
    step: f64,
) -> Result<HessianMetric> {
    check_step(step)?;
    let domain = field.domain();
    let f = |p: LagrangeCoords| field.expectations(p);
    probe(&domain, at, &f)?;
    let [h1, h2] = axis_steps(at, step);
    let d1 = partial(&domain, at, 0, h1, &f)?;
    let d2 = partial(&domain, at, 1, h2, &f)?;
    let metric = MetricTensor2::new(-d1[0], -0.5 * (d2[0] + d1[1]), -d2[1]);
    Ok(HessianMetric {
        metric,
        warning: metric.conditioning(),
    })
}
