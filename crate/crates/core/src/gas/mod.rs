//! Ideal Fermi-Dirac, Bose-Einstein and classical gases with density of states
//! `κ ε^η` in the continuous approximation.

mod bundle;
mod dos;
mod fields;
mod limits;
mod model;
mod sample;
mod thermo;

pub use bundle::{det_bundle, DeterminantBundle};
pub use dos::{dos_catalog, DensityOfStatesEntry, DosSystem, PhysicalInputs};
pub use limits::{limit_coefficients, limit_curvature, LimitCoefficients};
pub use model::{GasModel, Statistics, ThermoPoint};
pub use sample::{geometry_sample, GeometrySample};
pub use thermo::{
    averages, free_energy, free_energy_ground_corrected, ground_state_occupation, metric,
    metric_be, metric_classical, metric_fd, Averages,
};
