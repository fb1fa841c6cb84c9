use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gibbs::{Domain, LagrangeCoords};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistics {
    FermiDirac,
    /// Bose-Einstein with the ground-state occupation `ξ/(1-ξ)` added to `N`.
    BoseEinstein,
    /// Bose-Einstein in the bare continuous approximation (no ground state).
    BoseEinsteinNoGround,
    ClassicalIdeal,
}

impl Statistics {
    pub const ALL: [Statistics; 4] = [
        Statistics::FermiDirac,
        Statistics::BoseEinstein,
        Statistics::BoseEinsteinNoGround,
        Statistics::ClassicalIdeal,
    ];

    /// Short name used on the command line and in CSV output.
    pub fn code(&self) -> &'static str {
        match self {
            Statistics::FermiDirac => "fd",
            Statistics::BoseEinstein => "be",
            Statistics::BoseEinsteinNoGround => "be0",
            Statistics::ClassicalIdeal => "classical",
        }
    }

    pub fn is_bosonic(&self) -> bool {
        matches!(self, Statistics::BoseEinstein | Statistics::BoseEinsteinNoGround)
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Statistics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistics::ALL
            .into_iter()
            .find(|st| st.code() == s)
            .ok_or_else(|| Error::domain("statistics", format!("unknown statistics '{s}' (fd, be, be0, classical)")))
    }
}

/// An ideal gas in the continuous approximation with density of states `κ ε^η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasModel {
    statistics: Statistics,
    eta: f64,
    kappa: f64,
}

impl GasModel {
    pub fn new(statistics: Statistics, eta: f64, kappa: f64) -> Result<Self> {
        if !(eta > -1.0) || !eta.is_finite() {
            return Err(Error::domain("gas model", format!("η must be > -1, got {eta}")));
        }
        if !(kappa > 0.0) || !kappa.is_finite() {
            return Err(Error::domain("gas model", format!("κ must be > 0, got {kappa}")));
        }
        Ok(GasModel {
            statistics,
            eta,
            kappa,
        })
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// The dimensionless combination `β^(η+1)/κ`.
    pub fn reduced_beta(&self, beta: f64) -> f64 {
        beta.powf(self.eta + 1.0) / self.kappa
    }

    pub fn domain(&self) -> Domain {
        if self.statistics.is_bosonic() {
            Domain::BOSONIC
        } else {
            Domain::POSITIVE_BETA
        }
    }

    pub(crate) fn check(&self, p: ThermoPoint) -> Result<()> {
        if self.statistics.is_bosonic() && p.xi >= 1.0 {
            return Err(Error::domain(
                "thermo point",
                format!("Bose-Einstein statistics need 0 < ξ < 1, got ξ = {}", p.xi),
            ));
        }
        Ok(())
    }
}

/// A state of the gas: inverse temperature `β` and fugacity `ξ = e^(-λ²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoPoint {
    beta: f64,
    xi: f64,
}

impl ThermoPoint {
    pub fn new(beta: f64, xi: f64) -> Result<Self> {
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::domain("thermo point", format!("β must be > 0, got {beta}")));
        }
        if !(xi > 0.0) || !xi.is_finite() {
            return Err(Error::domain("thermo point", format!("ξ must be > 0, got {xi}")));
        }
        Ok(ThermoPoint { beta, xi })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn coords(&self) -> LagrangeCoords {
        LagrangeCoords::from_beta_xi(self.beta, self.xi)
    }
}

impl TryFrom<LagrangeCoords> for ThermoPoint {
    type Error = Error;

    fn try_from(c: LagrangeCoords) -> Result<Self> {
        ThermoPoint::new(c.beta, c.xi())
    }
}
