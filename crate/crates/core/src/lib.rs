#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision, clippy::needless_range_loop)]

//! Fisher-Rao information geometry of ideal quantum and classical gases in the
//! grand canonical ensemble.
//!
//! * [`special`]: Gamma, zeta and real-order polylogarithm.
//! * [`gibbs`]: generic two-parameter exponential-family geometry (numeric
//!   Hessian metric, scalar curvature by two routes, Legendre entropy) and an
//!   exact Fock-space enumeration oracle.
//! * [`gas`]: closed forms for Fermi-Dirac, Bose-Einstein (with and without the
//!   ground-state term) and classical gases with density of states `κ ε^η`.
//! * [`verify`]: the cross-validation suites behind `qgeom verify`.

pub mod error;
pub mod gas;
pub mod gibbs;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
