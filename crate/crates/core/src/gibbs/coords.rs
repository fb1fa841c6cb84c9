/// Lagrange-multiplier coordinates of the grand canonical Gibbs family:
/// `λ¹ = β` (inverse temperature) and `λ² = -μ/kT`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LagrangeCoords {
    pub beta: f64,
    pub lambda2: f64,
}

impl LagrangeCoords {
    pub fn new(beta: f64, lambda2: f64) -> Self {
        LagrangeCoords { beta, lambda2 }
    }

    /// Coordinates for inverse temperature `beta` and fugacity `xi = e^-λ²`.
    pub fn from_beta_xi(beta: f64, xi: f64) -> Self {
        LagrangeCoords {
            beta,
            lambda2: -xi.ln(),
        }
    }

    pub fn xi(&self) -> f64 {
        (-self.lambda2).exp()
    }

    pub fn component(&self, index: usize) -> f64 {
        match index {
            0 => self.beta,
            1 => self.lambda2,
            _ => panic!("coordinate index {index} out of range"),
        }
    }

    pub(crate) fn shifted(&self, d_beta: f64, d_lambda2: f64) -> Self {
        LagrangeCoords {
            beta: self.beta + d_beta,
            lambda2: self.lambda2 + d_lambda2,
        }
    }
}

/// Validity box of a field in `(β, ξ)`: `β > beta_min` and, when set, `ξ < xi_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Domain {
    pub beta_min: f64,
    pub xi_max: Option<f64>,
}

impl Domain {
    /// `β > 0`, any fugacity.
    pub const POSITIVE_BETA: Domain = Domain {
        beta_min: 0.0,
        xi_max: None,
    };

    /// `β > 0`, `0 < ξ < 1`.
    pub const BOSONIC: Domain = Domain {
        beta_min: 0.0,
        xi_max: Some(1.0),
    };

    pub fn contains(&self, at: LagrangeCoords) -> bool {
        at.beta > self.beta_min
            && at.beta.is_finite()
            && at.lambda2.is_finite()
            && self.xi_max.is_none_or(|m| at.xi() < m)
    }
}
