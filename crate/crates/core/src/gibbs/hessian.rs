use super::coords::LagrangeCoords;
use super::diff::{axis_steps, check_step, probe, richardson};
use super::field::FreeEnergyField;
use super::metric::{Conditioning, MetricTensor2};
use crate::error::Result;

/// A metric estimated by finite differences, with a conditioning warning when
/// the result is not a usable Fisher metric.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HessianMetric {
    pub metric: MetricTensor2,
    pub warning: Option<Conditioning>,
}

/// `g_{μν} = -∂²F/∂λ^μ∂λ^ν` by central second differences, extrapolated once.
///
/// `step` is relative; see [`axis_steps`](super::diff::axis_steps).
pub fn hessian_metric(
    field: &impl FreeEnergyField,
    at: LagrangeCoords,
    step: f64,
) -> Result<HessianMetric> {
    check_step(step)?;
    let domain = field.domain();
    let f = |p: LagrangeCoords| field.free_energy(p);
    let center = probe(&domain, at, &f)?;
    let [h1, h2] = axis_steps(at, step);

    let second = |h1: f64, h2: f64| -> Result<[f64; 3]> {
        let e = |d1: f64, d2: f64| probe(&domain, at.shifted(d1, d2), &f);
        let d11 = (e(h1, 0.0)? - 2.0 * center + e(-h1, 0.0)?) / (h1 * h1);
        let d22 = (e(0.0, h2)? - 2.0 * center + e(0.0, -h2)?) / (h2 * h2);
        let d12 = (e(h1, h2)? - e(h1, -h2)? - e(-h1, h2)? + e(-h1, -h2)?) / (4.0 * h1 * h2);
        Ok([d11, d12, d22])
    };
    let coarse = second(h1, h2)?;
    let fine = second(0.5 * h1, 0.5 * h2)?;
    let metric = MetricTensor2::new(
        -richardson(coarse[0], fine[0]),
        -richardson(coarse[1], fine[1]),
        -richardson(coarse[2], fine[2]),
    );
    Ok(HessianMetric {
        metric,
        warning: metric.conditioning(),
    })
}

/// `A_μ = ∂F/∂λ^μ` by extrapolated central differences.
pub fn gradient(field: &impl FreeEnergyField, at: LagrangeCoords, step: f64) -> Result<[f64; 2]> {
    check_step(step)?;
    let domain = field.domain();
    let f = |p: LagrangeCoords| field.free_energy(p).map(|v| [v]);
    let [h1, h2] = axis_steps(at, step);
    let d1 = super::diff::partial(&domain, at, 0, h1, &f)?;
    let d2 = super::diff::partial(&domain, at, 1, h2, &f)?;
    Ok([d1[0], d2[0]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gibbs::coords::Domain;
    use crate::gibbs::field::FnFreeEnergy;

    #[test]
    fn bilinear_free_energy_is_degenerate() {
        let field = FnFreeEnergy::new(Domain::POSITIVE_BETA, |p: LagrangeCoords| {
            Ok(-(p.beta * p.lambda2))
        });
        let h = hessian_metric(&field, LagrangeCoords::new(1.3, 0.4), 1e-3).unwrap();
        assert!(h.metric.g11.abs() < 1e-9);
        assert!((h.metric.g12 - 1.0).abs() < 1e-9);
        assert!(h.metric.g22.abs() < 1e-9);
        assert!(matches!(h.warning, Some(Conditioning::NotPositiveDefinite { .. })));
    }

    #[test]
    fn quadratic_log_partition_gives_constant_metric() {
        // log Z = ½ λᵀ C λ  ⇒  g = C
        let field = FnFreeEnergy::new(Domain::POSITIVE_BETA, |p: LagrangeCoords| {
            let (a, b) = (p.beta, p.lambda2);
            Ok(-0.5 * (2.0 * a * a + 2.0 * 0.3 * a * b + 0.5 * b * b))
        });
        let h = hessian_metric(&field, LagrangeCoords::new(0.8, -1.1), 2e-3).unwrap();
        assert!((h.metric.g11 - 2.0).abs() < 1e-8);
        assert!((h.metric.g12 - 0.3).abs() < 1e-8);
        assert!((h.metric.g22 - 0.5).abs() < 1e-8);
        assert!(h.warning.is_none());
    }

    #[test]
    fn rejects_non_positive_step() {
        let field = FnFreeEnergy::new(Domain::POSITIVE_BETA, |_: LagrangeCoords| Ok(0.0));
        assert!(hessian_metric(&field, LagrangeCoords::new(1.0, 0.0), 0.0).is_err());
    }
}
