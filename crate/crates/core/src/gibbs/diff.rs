//! Central finite differences with one Richardson halving.

use super::coords::{Domain, LagrangeCoords};
use crate::error::{Error, Result};

/// Default relative step for second derivatives of a free energy.
pub const DEFAULT_HESSIAN_STEP: f64 = 2e-3;
/// Default relative step for first derivatives (gradients, metric derivatives).
pub const DEFAULT_GRADIENT_STEP: f64 = 1e-3;

/// Absolute step along each coordinate for relative step `step`.
///
/// `β` is strictly positive so its step scales with `β` itself; `λ²` crosses
/// zero and uses `max(1, |λ²|)`.
pub fn axis_steps(at: LagrangeCoords, step: f64) -> [f64; 2] {
    [step * at.beta.abs(), step * at.lambda2.abs().max(1.0)]
}

pub(crate) fn check_step(step: f64) -> Result<()> {
    if step > 0.0 && step.is_finite() {
        Ok(())
    } else {
        Err(Error::domain("finite difference", format!("step must be positive, got {step}")))
    }
}

/// Evaluates `f` at a stencil point after checking it lies inside `domain`.
pub(crate) fn probe<T>(
    domain: &Domain,
    at: LagrangeCoords,
    f: &impl Fn(LagrangeCoords) -> Result<T>,
) -> Result<T> {
    if !domain.contains(at) {
        return Err(Error::StencilOutsideDomain {
            beta: at.beta,
            lambda2: at.lambda2,
        });
    }
    f(at)
}

#[inline]
pub(crate) fn richardson(coarse: f64, fine: f64) -> f64 {
    (4.0 * fine - coarse) / 3.0
}

/// Richardson-extrapolated central first derivative of a vector-valued function
/// along `axis`.
pub(crate) fn partial<const N: usize>(
    domain: &Domain,
    at: LagrangeCoords,
    axis: usize,
    h: f64,
    f: &impl Fn(LagrangeCoords) -> Result<[f64; N]>,
) -> Result<[f64; N]> {
    let shift = |d: f64| match axis {
        0 => at.shifted(d, 0.0),
        _ => at.shifted(0.0, d),
    };
    let central = |h: f64| -> Result<[f64; N]> {
        let plus = probe(domain, shift(h), f)?;
        let minus = probe(domain, shift(-h), f)?;
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = (plus[i] - minus[i]) / (2.0 * h);
        }
        Ok(out)
    };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    let mut out = [0.0; N];
    for i in 0..N {
        out[i] = richardson(coarse[i], fine[i]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_smooth_function() {
        let f = |p: LagrangeCoords| -> Result<[f64; 2]> {
            Ok([p.beta.sin() * p.lambda2.exp(), p.beta.powi(3)])
        };
        let at = LagrangeCoords::new(0.7, -0.3);
        let d0 = partial(&Domain::POSITIVE_BETA, at, 0, 1e-3, &f).unwrap();
        let d1 = partial(&Domain::POSITIVE_BETA, at, 1, 1e-3, &f).unwrap();
        assert!((d0[0] - 0.7f64.cos() * (-0.3f64).exp()).abs() < 1e-12);
        assert!((d0[1] - 3.0 * 0.49).abs() < 1e-12);
        assert!((d1[0] - 0.7f64.sin() * (-0.3f64).exp()).abs() < 1e-12);
        assert!(d1[1].abs() < 1e-12);
    }

    #[test]
    fn stencil_leaving_domain_is_an_error() {
        let f = |_: LagrangeCoords| -> Result<[f64; 1]> { Ok([1.0]) };
        let at = LagrangeCoords::from_beta_xi(1.0, 0.999_999);
        let err = partial(&Domain::BOSONIC, at, 1, 1e-3, &f).unwrap_err();
        assert!(matches!(err, Error::StencilOutsideDomain { .. }));
    }
}
