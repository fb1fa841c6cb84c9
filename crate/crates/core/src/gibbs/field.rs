use super::coords::{Domain, LagrangeCoords};
use super::metric::MetricTensor2;
use crate::error::Result;

/// Free energy `F(λ) = -log Z(λ)` of a two-parameter Gibbs family.
///
/// Implementations must be callable from several threads at once.
pub trait FreeEnergyField: Sync {
    fn free_energy(&self, at: LagrangeCoords) -> Result<f64>;

    fn domain(&self) -> Domain {
        Domain::POSITIVE_BETA
    }
}

/// A metric-valued field over the Lagrange coordinates.
pub trait MetricField: Sync {
    fn metric(&self, at: LagrangeCoords) -> Result<MetricTensor2>;

    fn domain(&self) -> Domain {
        Domain::POSITIVE_BETA
    }
}

/// Adapts a closure into a [`FreeEnergyField`].
pub struct FnFreeEnergy<F> {
    f: F,
    domain: Domain,
}

impl<F> FnFreeEnergy<F>
where
    F: Fn(LagrangeCoords) -> Result<f64> + Sync,
{
    pub fn new(domain: Domain, f: F) -> Self {
        FnFreeEnergy { f, domain }
    }
}

impl<F> FreeEnergyField for FnFreeEnergy<F>
where
    F: Fn(LagrangeCoords) -> Result<f64> + Sync,
{
    fn free_energy(&self, at: LagrangeCoords) -> Result<f64> {
        (self.f)(at)
    }

    fn domain(&self) -> Domain {
        self.domain
    }
}

/// Adapts a closure into a [`MetricField`].
pub struct FnMetric<F> {
    f: F,
    domain: Domain,
}

impl<F> FnMetric<F>
where
    F: Fn(LagrangeCoords) -> Result<MetricTensor2> + Sync,
{
    pub fn new(domain: Domain, f: F) -> Self {
        FnMetric { f, domain }
    }
}

impl<F> MetricField for FnMetric<F>
where
    F: Fn(LagrangeCoords) -> Result<MetricTensor2> + Sync,
{
    fn metric(&self, at: LagrangeCoords) -> Result<MetricTensor2> {
        (self.f)(at)
    }

    fn domain(&self) -> Domain {
        self.domain
    }
}
