use super::thermo::{ground_state_third_cumulant, ground_state_variance};
use crate::error::{Error, Result};
use crate::gibbs::det3;
use crate::special::{gamma, polylog, polylog_step_down};

/// The dimensionless determinants that carry the `ξ` dependence of the metric
/// determinant and the scalar curvature.
///
/// `a_c` and `b_c` are the ground-state contributions; they exist only for
/// `0 < x < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeterminantBundle {
    pub a: f64,
    pub b: f64,
    pub a_c: Option<f64>,
    pub b_c: Option<f64>,
}

/// `Li(x, η + j)` for `j = -1 ..= 2`, indexed by `j + 1`.
fn polylog_ladder(x: f64, eta: f64) -> Result<[f64; 4]> {
    let li0 = polylog(x, eta)?;
    // orders at or below -1 are reached by differentiating the next order up
    let li_m1 = if eta - 1.0 > -1.0 {
        polylog(x, eta - 1.0)?
    } else {
        polylog_step_down(x, eta)?
    };
    Ok([li_m1, li0, polylog(x, eta + 1.0)?, polylog(x, eta + 2.0)?])
}

pub fn det_bundle(x: f64, eta: f64) -> Result<DeterminantBundle> {
    if !(eta > -1.0) {
        return Err(Error::domain("det_bundle", format!("η must be > -1, got {eta}")));
    }
    if !(x < 1.0) || !x.is_finite() {
        return Err(Error::domain("det_bundle", format!("x must be < 1, got {x}")));
    }
    let g = |k: f64| gamma(eta + k);
    let (g1, g2, g3, g4) = (g(1.0)?, g(2.0)?, g(3.0)?, g(4.0)?);
    let [lm1, l0, l1, l2] = polylog_ladder(x, eta)?;

    let a = g3 * l2 * g1 * l0 - (g2 * l1).powi(2);
    let b = det3(&[
        [g3 * l2, g2 * l1, g1 * l0],
        [g4 * l2, g3 * l1, g2 * l0],
        [g3 * l1, g2 * l0, g1 * lm1],
    ]);
    let (a_c, b_c) = if x > 0.0 {
        let var = ground_state_variance(x);
        let a_c = g3 * l2 * var;
        let b_c = det3(&[
            [g3 * l2, g2 * l1, var],
            [g4 * l2, g3 * l1, 0.0],
            [g3 * l1, g2 * l0, ground_state_third_cumulant(x)],
        ]);
        (Some(a_c), Some(b_c))
    } else {
        (None, None)
    };
    Ok(DeterminantBundle { a, b, a_c, b_c })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_argument_scaling_at_half() {
        let bd = det_bundle(-1e-4, 0.5).unwrap();
        assert!((bd.a / 1e-8 - 1.178).abs() < 1e-3);
        assert!(bd.a_c.is_none());
        let bd = det_bundle(-1e-3, 0.5).unwrap();
        assert!(bd.b.abs() < 1e-8);
        assert!((bd.b / 1e-12 + 0.6921).abs() < 5e-3, "{}", bd.b / 1e-12);
        let bd = det_bundle(1e-3, 0.5).unwrap();
        assert!((bd.a_c.unwrap() / 1e-6 - 3.323).abs() < 1e-2);
    }

    #[test]
    fn orders_below_minus_one_are_reached() {
        // η - 1 = -1.7 needs the stepped-down polylogarithm
        let bd = det_bundle(-0.3, -0.7).unwrap();
        assert!(bd.a.is_finite() && bd.b.is_finite());
        assert!(bd.a > 0.0);
    }

    #[test]
    fn domain_is_checked() {
        assert!(det_bundle(1.0, 0.5).is_err());
        assert!(det_bundle(0.5, -1.0).is_err());
    }
}
