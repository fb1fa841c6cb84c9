use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// The polylogarithm diverges physically near `y -> 1` and the value is not representable.
    #[error("polylogarithm overflow at y = {y}, order = {order}")]
    Overflow { y: f64, order: f64 },

    #[error("{what} failed to converge: {detail}")]
    Convergence { what: &'static str, detail: String },

    /// A finite-difference stencil left the declared domain of a field.
    #[error("stencil point (beta = {beta}, lambda2 = {lambda2}) lies outside the field domain")]
    StencilOutsideDomain { beta: f64, lambda2: f64 },

    #[error("metric is singular (det g = {det})")]
    SingularMetric { det: f64 },

    /// The metric is positive-definite but too close to degenerate for curvature to be meaningful.
    #[error("metric is ill-conditioned: det g = {det} < {threshold}")]
    IllConditioned { det: f64, threshold: f64 },

    #[error("enumeration of {states} Fock states exceeds the bound of {limit}")]
    EnumerationTooLarge { states: f64, limit: f64 },

    #[error("unknown density-of-states system: {0}")]
    UnknownSystem(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }
}
