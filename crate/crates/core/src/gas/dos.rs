//! Density-of-states parameters `(η, κ)` for common one-particle spectra.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::special::gamma;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DosSystem {
    /// Free particle in a box of volume `V`.
    Box,
    /// Massless particle, `ε = ħ c |k|`.
    Ultrarelativistic,
    /// Isotropic harmonic trap of frequency `ω`.
    HarmonicTrap,
}

impl DosSystem {
    pub fn name(&self) -> &'static str {
        match self {
            DosSystem::Box => "box",
            DosSystem::Ultrarelativistic => "ultrarelativistic",
            DosSystem::HarmonicTrap => "harmonic_trap",
        }
    }
}

impl fmt::Display for DosSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DosSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "box" => Ok(DosSystem::Box),
            "ultrarelativistic" => Ok(DosSystem::Ultrarelativistic),
            "harmonic_trap" => Ok(DosSystem::HarmonicTrap),
            other => Err(Error::UnknownSystem(other.to_string())),
        }
    }
}

/// Physical inputs; each system reads only the ones it needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalInputs {
    /// Spin degeneracy.
    pub g_s: f64,
    pub volume: f64,
    pub mass: f64,
    pub hbar: f64,
    pub c: f64,
    pub omega: f64,
}

impl Default for PhysicalInputs {
    fn default() -> Self {
        PhysicalInputs {
            g_s: 1.0,
            volume: 1.0,
            mass: 1.0,
            hbar: 1.0,
            c: 1.0,
            omega: 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityOfStatesEntry {
    pub system: DosSystem,
    pub dims: u32,
    pub eta: f64,
    pub kappa: f64,
}

pub fn dos_catalog(system: DosSystem, dims: u32, inputs: &PhysicalInputs) -> Result<DensityOfStatesEntry> {
    if dims == 0 {
        return Err(Error::domain("dos_catalog", "dimension must be at least 1"));
    }
    let (eta, kappa) = if dims == 3 {
        three_dimensional(system, inputs)
    } else {
        d_dimensional(system, dims, inputs)?
    };
    Ok(DensityOfStatesEntry {
        system,
        dims,
        eta,
        kappa,
    })
}

fn three_dimensional(system: DosSystem, p: &PhysicalInputs) -> (f64, f64) {
    match system {
        DosSystem::Box => (
            0.5,
            p.g_s * p.volume / (4.0 * PI * PI) * (2.0 * p.mass / (p.hbar * p.hbar)).powf(1.5),
        ),
        DosSystem::Ultrarelativistic => (
            2.0,
            p.g_s * p.volume / (2.0 * PI * PI) * (p.hbar * p.c).powi(-3),
        ),
        DosSystem::HarmonicTrap => (2.0, 0.5 * p.g_s * (p.hbar * p.omega).powi(-3)),
    }
}

fn d_dimensional(system: DosSystem, dims: u32, p: &PhysicalInputs) -> Result<(f64, f64)> {
    let d = dims as f64;
    Ok(match system {
        DosSystem::Box => (
            0.5 * d - 1.0,
            p.g_s * p.volume / gamma(0.5 * d)? * (p.mass / (2.0 * PI * p.hbar * p.hbar)).powf(0.5 * d),
        ),
        DosSystem::Ultrarelativistic => (
            d - 1.0,
            2.0 * p.g_s * p.volume / gamma(0.5 * d)? * (2.0 * PI.sqrt() * p.hbar * p.c).powf(-d),
        ),
        DosSystem::HarmonicTrap => (d - 1.0, p.g_s / gamma(d)? * (p.hbar * p.omega).powf(-d)),
    })
}
