//! A [`GasModel`] seen as a Gibbs family over the Lagrange coordinates.
//!
//! For Bose-Einstein with the ground state, the free energy is the bare
//! continuous-approximation one; its Hessian is therefore the metric without
//! the ground-state term. The full metric is the negative Jacobian of the
//! expectations, which do include it.

use super::model::{GasModel, ThermoPoint};
use super::thermo::{averages, free_energy, metric};
use crate::error::Result;
use crate::gibbs::{Domain, ExpectationField, FreeEnergyField, LagrangeCoords, MetricField, MetricTensor2};

impl FreeEnergyField for GasModel {
    fn free_energy(&self, at: LagrangeCoords) -> Result<f64> {
        free_energy(self, ThermoPoint::try_from(at)?)
    }

    fn domain(&self) -> Domain {
        GasModel::domain(self)
    }
}

impl MetricField for GasModel {
    fn metric(&self, at: LagrangeCoords) -> Result<MetricTensor2> {
        metric(self, ThermoPoint::try_from(at)?)
    }

    fn domain(&self) -> Domain {
        GasModel::domain(self)
    }
}

impl ExpectationField for GasModel {
    fn expectations(&self, at: LagrangeCoords) -> Result<[f64; 2]> {
        let a = averages(self, ThermoPoint::try_from(at)?)?;
        Ok([a.energy, a.particles])
    }

    fn domain(&self) -> Domain {
        GasModel::domain(self)
    }
}
