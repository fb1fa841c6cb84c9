use super::model::{GasModel, Statistics};
use crate::error::{Error, Result};
use crate::special::gamma;

/// Leading coefficients of the determinant bundles at small fugacity:
/// `A ≈ f x²`, `A_c ≈ f_c x²`, `B ≈ h x⁴`, `B_c ≈ h_c x⁴`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitCoefficients {
    pub f: f64,
    pub f_c: f64,
    pub h: f64,
    pub h_c: f64,
}

pub fn limit_coefficients(eta: f64) -> Result<LimitCoefficients> {
    if !(eta > -1.0) {
        return Err(Error::domain("limit_coefficients", format!("η must be > -1, got {eta}")));
    }
    let g = |k: f64| gamma(eta + k);
    let (g1, g2, g3, g4) = (g(1.0)?, g(2.0)?, g(3.0)?, g(4.0)?);
    let half_pow = 2f64.powf(-(eta + 1.0));
    Ok(LimitCoefficients {
        f: g3 * g1 - g2 * g2,
        f_c: g3,
        h: half_pow * (-g1 * g2 * g4 + 1.5 * g1 * g3 * g3 - 0.5 * g2 * g2 * g3),
        h_c: half_pow * (g2 * g4 - 0.5 * g3 * g3) + 2.0 * (g3 * g3 - g2 * g4),
    })
}

/// Scalar curvature in the low-fugacity limit. `beta = 0` is allowed and gives 0.
pub fn limit_curvature(model: &GasModel, beta: f64) -> Result<f64> {
    if !(beta >= 0.0) || !beta.is_finite() {
        return Err(Error::domain("limit_curvature", format!("β must be >= 0, got {beta}")));
    }
    let st = model.statistics();
    if !matches!(st, Statistics::FermiDirac | Statistics::BoseEinstein) {
        return Err(Error::domain("limit_curvature", format!("defined for fd and be statistics, got {st}")));
    }
    let b = model.reduced_beta(beta);
    if b == 0.0 {
        // exact zero, not the -0.0 the Fermi-Dirac branch would produce
        return Ok(0.0);
    }
    let c = limit_coefficients(model.eta())?;
    Ok(if st == Statistics::FermiDirac {
        0.5 * b * c.h / (c.f * c.f)
    } else {
        let den = c.f + c.f_c * b;
        -0.5 * b * (c.h + c.h_c * b) / (den * den)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_at_half() {
        let c = limit_coefficients(0.5).unwrap();
        assert!((c.f - 1.178).abs() < 1e-3);
        assert!((c.f_c - 3.323).abs() < 1e-3);
        assert!((c.h + 0.6921).abs() < 1e-3);
        assert!((c.h_c + 5.321).abs() < 1e-3);
    }

    #[test]
    fn f_simplifies_by_recurrence() {
        for eta in [-0.5, 0.5, 1.0, 2.0, 3.7] {
            let c = limit_coefficients(eta).unwrap();
            let g = gamma(eta + 1.0).unwrap() * gamma(eta + 2.0).unwrap();
            assert!(((c.f - g) / g).abs() < 1e-12, "η = {eta}");
        }
    }

    #[test]
    fn limit_values() {
        let fd = GasModel::new(Statistics::FermiDirac, 0.5, 1.0).unwrap();
        assert!((limit_curvature(&fd, 1.0).unwrap() + 0.24935).abs() < 1e-3);
        let be = GasModel::new(Statistics::BoseEinstein, 0.5, 1.0).unwrap();
        let r = limit_curvature(&be, 1.0).unwrap();
        assert!((r - 0.148_385).abs() < 1e-4, "{r}");
        assert_eq!(limit_curvature(&fd, 0.0).unwrap().to_bits(), 0f64.to_bits());
        assert_eq!(limit_curvature(&be, 0.0).unwrap(), 0.0);
        let cl = GasModel::new(Statistics::ClassicalIdeal, 0.5, 1.0).unwrap();
        assert!(limit_curvature(&cl, 1.0).is_err());
    }
}
