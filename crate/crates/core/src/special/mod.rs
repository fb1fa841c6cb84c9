//! Real-argument special functions: Gamma, Riemann zeta and the real-order
//! polylogarithm, plus the adaptive quadrature they rely on.

mod gamma;
pub mod polylog;
pub mod quadrature;
mod zeta;

pub use gamma::gamma;
pub use polylog::{polylog, polylog_step_down, PolylogQuery};
pub use zeta::zeta;
