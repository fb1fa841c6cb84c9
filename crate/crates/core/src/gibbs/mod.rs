//! Geometry of two-parameter Gibbs families in Lagrange-multiplier coordinates,
//! and an exact Fock-space enumeration oracle.

mod coords;
pub mod curvature;
pub mod diff;
mod entropy;
mod field;
pub mod fock;
mod hessian;
mod jacobian;
mod metric;

pub use coords::{Domain, LagrangeCoords};
pub use curvature::{
    curvature_from_jet_det, det3, curvature_from_jet_riemann, metric_jet, scalar_curvature_det,
    scalar_curvature_riemann, MetricJet,
};
pub use diff::{DEFAULT_GRADIENT_STEP, DEFAULT_HESSIAN_STEP};
pub use entropy::legendre_entropy;
pub use field::{FnFreeEnergy, FnMetric, FreeEnergyField, MetricField};
pub use fock::{fock_log_partition, fock_moments, FockEnsembleSpec, FockStatistics};
pub use hessian::{gradient, hessian_metric, HessianMetric};
pub use jacobian::{jacobian_metric, ExpectationField};
pub use metric::{Conditioning, MetricTensor2, DEGENERACY_RATIO};
