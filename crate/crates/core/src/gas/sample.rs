use super::bundle::det_bundle;
use super::limits::limit_coefficients;
use super::model::{GasModel, Statistics, ThermoPoint};
use super::thermo::metric;
use crate::error::Result;
use crate::gibbs::{Conditioning, MetricTensor2};

/// Metric, determinant and scalar curvature of a gas at one point.
///
/// `det_g = (κ/β^(η+2))² · g_bar` and `R = ±(β^(η+1)/2κ) · r_bar`, with the
/// minus sign for the Bose-Einstein variants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometrySample {
    pub point: ThermoPoint,
    pub metric: MetricTensor2,
    pub det_g: f64,
    pub g_bar: f64,
    pub r: f64,
    pub r_bar: f64,
    pub warning: Option<Conditioning>,
}

pub fn geometry_sample(model: &GasModel, p: ThermoPoint) -> Result<GeometrySample> {
    let g = metric(model, p)?;
    let b = model.reduced_beta(p.beta());
    let (g_bar, r_bar, sign) = match model.statistics() {
        Statistics::FermiDirac => {
            let bd = det_bundle(-p.xi(), model.eta())?;
            (bd.a, bd.b / (bd.a * bd.a), 1.0)
        }
        Statistics::BoseEinsteinNoGround => {
            let bd = det_bundle(p.xi(), model.eta())?;
            (bd.a, bd.b / (bd.a * bd.a), -1.0)
        }
        Statistics::BoseEinstein => {
            let bd = det_bundle(p.xi(), model.eta())?;
            let a_c = bd.a_c.expect("ground-state terms exist for 0 < ξ < 1");
            let b_c = bd.b_c.expect("ground-state terms exist for 0 < ξ < 1");
            let g_bar = bd.a + b * a_c;
            (g_bar, (bd.b + b * b_c) / (g_bar * g_bar), -1.0)
        }
        Statistics::ClassicalIdeal => {
            let f = limit_coefficients(model.eta())?.f;
            (p.xi() * p.xi() * f, 0.0, 1.0)
        }
    };
    let scale = model.kappa() / p.beta().powf(model.eta() + 2.0);
    Ok(GeometrySample {
        point: p,
        metric: g,
        det_g: scale * scale * g_bar,
        g_bar,
        r: sign * 0.5 * b * r_bar,
        r_bar,
        warning: g.conditioning(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(st: Statistics, eta: f64, kappa: f64, beta: f64, xi: f64) -> GeometrySample {
        let m = GasModel::new(st, eta, kappa).unwrap();
        geometry_sample(&m, ThermoPoint::new(beta, xi).unwrap()).unwrap()
    }

    #[test]
    fn classical_is_flat() {
        let s = sample(Statistics::ClassicalIdeal, 0.5, 1.0, 1.0, 1.0);
        assert_eq!(s.r, 0.0);
        assert!(((s.det_g - s.metric.det()) / s.det_g).abs() < 1e-14);
    }

    #[test]
    fn fd_low_fugacity_curvature() {
        let s = sample(Statistics::FermiDirac, 0.5, 1.0, 1.0, 1e-5);
        assert!((s.r + 0.24935).abs() < 1e-3, "{}", s.r);
    }

    #[test]
    fn determinant_matches_metric_entries() {
        for st in Statistics::ALL {
            let s = sample(st, 2.0, 0.7, 1.3, 0.4);
            let rel = (s.det_g - s.metric.det()) / s.det_g;
            assert!(rel.abs() < 1e-12, "{st}: {rel}");
        }
    }

    #[test]
    fn sign_structure() {
        assert!(sample(Statistics::FermiDirac, 0.5, 1.0, 1.0, 0.5).r < 0.0);
        assert!(sample(Statistics::BoseEinsteinNoGround, 0.5, 1.0, 1.0, 0.5).r > 0.0);
    }

    #[test]
    fn ground_state_removes_divergence() {
        let xi = 1.0 - 1e-6;
        let with = sample(Statistics::BoseEinstein, 0.5, 1.0, 1.0, xi);
        let without = sample(Statistics::BoseEinsteinNoGround, 0.5, 1.0, 1.0, xi);
        assert!(with.r.abs() < 1e-2);
        assert!(without.r > 1e2);
    }
}
