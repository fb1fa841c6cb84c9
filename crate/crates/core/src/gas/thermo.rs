//! Closed-form thermodynamics and Fisher metric of the continuous-approximation gases.

use super::model::{GasModel, Statistics, ThermoPoint};
use crate::error::{Error, Result};
use crate::gibbs::MetricTensor2;
use crate::special::{gamma, polylog};

/// Polylogarithm argument and overall sign for a statistics: the Fermi-Dirac
/// quantities are `-Li(-ξ, ·)`, the Bose-Einstein ones `+Li(ξ, ·)`.
fn branch(model: &GasModel, xi: f64) -> (f64, f64) {
    match model.statistics() {
        Statistics::FermiDirac => (-xi, -1.0),
        _ => (xi, 1.0),
    }
}

/// `Li(y, η + order)`, or its first-order expansion `y` for the classical gas.
fn li(model: &GasModel, y: f64, order: f64) -> Result<f64> {
    if model.statistics() == Statistics::ClassicalIdeal {
        Ok(y)
    } else {
        polylog(y, model.eta() + order)
    }
}

/// `κ Γ(η+k) / β^(η+k)`
fn prefactor(model: &GasModel, beta: f64, k: f64) -> Result<f64> {
    let e = model.eta() + k;
    Ok(model.kappa() * gamma(e)? / beta.powf(e))
}

/// `ξ / (1 - ξ)`, the mean occupation of the zero-energy level.
pub fn ground_state_occupation(p: ThermoPoint) -> Result<f64> {
    let xi = p.xi();
    if xi >= 1.0 {
        return Err(Error::domain("ground_state_occupation", format!("needs ξ < 1, got {xi}")));
    }
    Ok(xi / (1.0 - xi))
}

/// `ξ / (1 - ξ)²`, the ground-state contribution to `g22`.
pub(crate) fn ground_state_variance(xi: f64) -> f64 {
    // 1 - ξ is exact for ξ in [1/2, 1], which is where it is small
    let w = 1.0 - xi;
    xi / (w * w)
}

/// `ξ (1 + ξ) / (1 - ξ)³`, the ground-state contribution to `∂g22/∂λ²` (up to sign).
pub(crate) fn ground_state_third_cumulant(xi: f64) -> f64 {
    let w = 1.0 - xi;
    xi * (1.0 + xi) / (w * w * w)
}

/// `F = -log Z`. For Bose-Einstein with ground state this is the bare
/// continuous-approximation free energy; see [`free_energy_ground_corrected`].
pub fn free_energy(model: &GasModel, p: ThermoPoint) -> Result<f64> {
    model.check(p)?;
    let (y, sign) = branch(model, p.xi());
    Ok(-sign * prefactor(model, p.beta(), 1.0)? * li(model, y, 2.0)?)
}

/// Free energy whose gradient reproduces `N` including the ground-state term:
/// the bare value plus `ln(1 - ξ)`. Diagnostic only; the Bose-Einstein metric is
/// defined from the Jacobian of `(U, N)`.
pub fn free_energy_ground_corrected(model: &GasModel, p: ThermoPoint) -> Result<f64> {
    let bare = free_energy(model, p)?;
    if model.statistics() == Statistics::BoseEinstein {
        Ok(bare + (-p.xi()).ln_1p())
    } else {
        Ok(bare)
    }
}

/// Mean energy and particle number.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Averages {
    pub energy: f64,
    pub particles: f64,
}

pub fn averages(model: &GasModel, p: ThermoPoint) -> Result<Averages> {
    model.check(p)?;
    let (y, sign) = branch(model, p.xi());
    let energy = sign * prefactor(model, p.beta(), 2.0)? * li(model, y, 2.0)?;
    let mut particles = sign * prefactor(model, p.beta(), 1.0)? * li(model, y, 1.0)?;
    if model.statistics() == Statistics::BoseEinstein {
        particles += ground_state_occupation(p)?;
    }
    Ok(Averages { energy, particles })
}

fn metric_closed_form(model: &GasModel, p: ThermoPoint) -> Result<MetricTensor2> {
    let (y, sign) = branch(model, p.xi());
    let b = p.beta();
    Ok(MetricTensor2::new(
        sign * prefactor(model, b, 3.0)? * li(model, y, 2.0)?,
        sign * prefactor(model, b, 2.0)? * li(model, y, 1.0)?,
        sign * prefactor(model, b, 1.0)? * li(model, y, 0.0)?,
    ))
}

/// Fisher metric of a Fermi-Dirac gas.
pub fn metric_fd(model: &GasModel, p: ThermoPoint) -> Result<MetricTensor2> {
    if model.statistics() != Statistics::FermiDirac {
        return Err(Error::domain("metric_fd", format!("model has {} statistics", model.statistics())));
    }
    model.check(p)?;
    metric_closed_form(model, p)
}

/// Fisher metric of a Bose-Einstein gas; the ground-state term adds
/// `ξ/(1-ξ)²` to `g22` only.
pub fn metric_be(model: &GasModel, p: ThermoPoint) -> Result<MetricTensor2> {
    if !model.statistics().is_bosonic() {
        return Err(Error::domain("metric_be", format!("model has {} statistics", model.statistics())));
    }
    model.check(p)?;
    let mut g = metric_closed_form(model, p)?;
    if model.statistics() == Statistics::BoseEinstein {
        g.g22 += ground_state_variance(p.xi());
    }
    Ok(g)
}

/// Fisher metric of the classical (Maxwell-Boltzmann) gas,
/// `κ Γ(η+k) ξ / β^(η+k)` for `k = 3, 2, 1`.
pub fn metric_classical(model: &GasModel, p: ThermoPoint) -> Result<MetricTensor2> {
    if model.statistics() != Statistics::ClassicalIdeal {
        return Err(Error::domain("metric_classical", format!("model has {} statistics", model.statistics())));
    }
    model.check(p)?;
    metric_closed_form(model, p)
}

/// Closed-form metric for any statistics.
pub fn metric(model: &GasModel, p: ThermoPoint) -> Result<MetricTensor2> {
    match model.statistics() {
        Statistics::FermiDirac => metric_fd(model, p),
        Statistics::BoseEinstein | Statistics::BoseEinsteinNoGround => metric_be(model, p),
        Statistics::ClassicalIdeal => metric_classical(model, p),
    }
}
