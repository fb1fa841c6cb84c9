use super::coords::LagrangeCoords;
use super::field::FreeEnergyField;
use super::hessian::gradient;
use crate::error::Result;

/// Entropy as the Legendre transform of the free energy,
/// `S = λ^μ A_μ - F` with `A_μ = ∂F/∂λ^μ` taken by finite differences.
pub fn legendre_entropy(field: &impl FreeEnergyField, at: LagrangeCoords, step: f64) -> Result<f64> {
    let a = gradient(field, at, step)?;
    let f = field.free_energy(at)?;
    Ok(at.beta * a[0] + at.lambda2 * a[1] - f)
}
