//! Real-order polylogarithm `Li(y, φ) = Σ_{k≥1} y^k / k^φ` for real `y < 1`.
//!
//! Three representations are used, each where it is accurate:
//!
//! * `|y| <= 1/2`: the defining power series.
//! * `y < -1/2` and `1/2 < y < 1 - 10^-3`: the Bose/Fermi integral
//!   `Li(y, φ) = Γ(φ)^-1 ∫_0^∞ u^(φ-1) / (e^u / y - 1) du`, integrated once by
//!   parts so that orders down to `φ > -1` share a single integrable kernel,
//!   and evaluated with `u = e^t` on an adaptive Gauss-Kronrod rule.
//! * `y >= 1 - 10^-3`: the expansion in `μ = ln y` around `μ = 0`,
//!   `Γ(1-φ)(-μ)^(φ-1) + Σ_k ζ(φ-k) μ^k / k!` (with the logarithmic form at
//!   positive integer orders).

use super::gamma::{gamma, gamma_unchecked};
use super::quadrature::{integrate, QuadratureConfig};
use super::zeta::zeta_unchecked;
use crate::error::{Error, Result};

/// Below this magnitude the power series is used.
pub const SERIES_RADIUS: f64 = 0.5;
/// `1 - y` below which the expansion about `y = 1` is used.
pub const NEAR_UNITY_GAP: f64 = 1e-3;
/// Orders closer than this to a positive integer (but not equal) lose too many
/// digits to cancellation in the near-unity expansion and fall back to quadrature.
const NEAR_INTEGER: f64 = 1e-4;

/// A validated polylogarithm argument pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolylogQuery {
    y: f64,
    phi: f64,
}

impl PolylogQuery {
    /// Accepts `y < 1` and `φ > -1`. The integer order `φ = -1` is also accepted,
    /// where the closed form `y / (1 - y)^2` applies.
    pub fn new(y: f64, phi: f64) -> Result<Self> {
        if !(y < 1.0) || y.is_nan() || y == f64::NEG_INFINITY {
            return Err(Error::domain("polylog", format!("argument y must satisfy y < 1, got {y}")));
        }
        if !(phi >= -1.0) || !phi.is_finite() {
            return Err(Error::domain("polylog", format!("order must satisfy φ > -1, got {phi}")));
        }
        Ok(PolylogQuery { y, phi })
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn eval(&self) -> Result<f64> {
        eval_order(self.y, self.phi)
    }
}

/// Which representation [`polylog`] uses for a given argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    ClosedForm,
    Series,
    Integral,
    NearUnity,
}

pub fn regime(y: f64, phi: f64) -> Regime {
    if closed_form(y, phi).is_some() {
        Regime::ClosedForm
    } else if y.abs() <= SERIES_RADIUS {
        Regime::Series
    } else if y >= 1.0 - NEAR_UNITY_GAP && !near_positive_integer(phi) {
        Regime::NearUnity
    } else {
        Regime::Integral
    }
}

/// `Li(y, φ)`.
pub fn polylog(y: f64, phi: f64) -> Result<f64> {
    PolylogQuery::new(y, phi)?.eval()
}

/// `Li(y, φ - 1)`, obtained as `y · d/dy Li(y, φ)`.
///
/// In the quadrature regime the `y`-derivative is taken under the integral sign,
/// which gives a kernel that stays integrable for resulting orders down to `-2`.
pub fn polylog_step_down(y: f64, phi: f64) -> Result<f64> {
    let q = PolylogQuery::new(y, phi)?;
    if q.phi == -1.0 {
        return Err(Error::domain("polylog_step_down", "order -2 is not supported"));
    }
    let lowered = phi - 1.0;
    let value = match regime(y, lowered) {
        Regime::ClosedForm => closed_form(y, lowered).expect("regime checked"),
        Regime::Series => polylog_series(y, lowered)?,
        Regime::NearUnity => polylog_near_unity(y, lowered)?,
        Regime::Integral => integral_form(y, phi, Kernel::Second)?,
    };
    finite_or_overflow(value, y, lowered)
}

fn eval_order(y: f64, phi: f64) -> Result<f64> {
    let value = match regime(y, phi) {
        Regime::ClosedForm => closed_form(y, phi).expect("regime checked"),
        Regime::Series => polylog_series(y, phi)?,
        Regime::NearUnity => polylog_near_unity(y, phi)?,
        Regime::Integral => polylog_integral(y, phi)?,
    };
    finite_or_overflow(value, y, phi)
}

fn finite_or_overflow(value: f64, y: f64, order: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow { y, order })
    }
}

fn closed_form(y: f64, phi: f64) -> Option<f64> {
    if y == 0.0 {
        return Some(0.0);
    }
    match phi {
        1.0 => Some(-(-y).ln_1p()),
        0.0 => Some(y / (1.0 - y)),
        -1.0 => {
            let w = 1.0 - y;
            Some(y / (w * w))
        }
        _ => None,
    }
}

fn near_positive_integer(phi: f64) -> bool {
    let n = phi.round();
    n >= 1.0 && phi != n && (phi - n).abs() < NEAR_INTEGER
}

/// Direct summation of `Σ y^k / k^φ`. Requires `|y| < 1`; converges slowly
/// beyond `|y| = 1/2`.
pub fn polylog_series(y: f64, phi: f64) -> Result<f64> {
    if !(y.abs() < 1.0) {
        return Err(Error::domain("polylog_series", format!("needs |y| < 1, got {y}")));
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 1..=100_000u32 {
        power *= y;
        let term = power * (k as f64).powf(-phi);
        sum += term;
        // terms eventually decrease geometrically; stop once they no longer register
        if k > 2 && term.abs() <= 1e-17 * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::Convergence {
        what: "polylog series",
        detail: format!("y = {y}, φ = {phi}"),
    })
}

#[derive(Debug, Clone, Copy)]
enum Kernel {
    /// `y e^-u / (1 - y e^-u)^2`, for resulting orders `> -1`.
    First,
    /// `y e^-u (1 + y e^-u) / (1 - y e^-u)^3`, one order lower.
    Second,
}

/// Integral representation, valid for any `y < 1` and orders `φ > -2`.
pub fn polylog_integral(y: f64, phi: f64) -> Result<f64> {
    if !(y < 1.0) {
        return Err(Error::domain("polylog_integral", format!("needs y < 1, got {y}")));
    }
    if phi > -1.0 {
        integral_form(y, phi, Kernel::First)
    } else if phi > -2.0 {
        integral_form(y, phi + 1.0, Kernel::Second)
    } else {
        Err(Error::domain("polylog_integral", format!("order must exceed -2, got {phi}")))
    }
}

/// `Γ(p+1)^-1 ∫_0^∞ u^p K(u) du` with `u = e^t`. With the first kernel this is
/// `Li(y, p)`; with the second it is `Li(y, p - 1)`.
fn integral_form(y: f64, p: f64, kernel: Kernel) -> Result<f64> {
    if y == 0.0 {
        return Ok(0.0);
    }
    let ln_y = if y > 0.0 { y.ln() } else { f64::NAN };
    let denominator = move |u: f64| -> (f64, f64) {
        // returns (y e^-u, 1 - y e^-u) without cancellation
        let z = y * (-u).exp();
        let d = if y > 0.0 { -(ln_y - u).exp_m1() } else { 1.0 - z };
        (z, d)
    };
    let integrand = move |t: f64| -> f64 {
        let u = t.exp();
        let (z, d) = denominator(u);
        let k = match kernel {
            Kernel::First => z / (d * d),
            Kernel::Second => z * (1.0 + z) / (d * d * d),
        };
        let w = (t * (p + 1.0)).exp() * k;
        if w.is_finite() {
            w
        } else {
            0.0
        }
    };

    // Scale of the integrand's bulk in u.
    let log_abs_y = y.abs().ln().max(0.0);
    let peak_u = if y > 0.0 { (1.0 - y).min(1.0) } else { log_abs_y.max(1.0) };
    let t_peak = peak_u.ln();
    let t_lo = (1.0 - y).min(1.0).ln() + (1e-18f64).ln() / (p + 1.0) - 2.0;
    let u_hi = log_abs_y + 60.0 + 4.0 * p.max(0.0);
    let t_hi = u_hi.ln();

    let cfg = QuadratureConfig {
        abs_tol: 0.0,
        rel_tol: 2e-14,
        max_intervals: 4000,
    };
    let mut total = 0.0;
    let mut breaks = vec![t_lo, t_peak - 3.0, t_peak, t_peak + 3.0, t_hi];
    breaks.retain(|t| *t >= t_lo && *t <= t_hi);
    breaks.dedup();
    for w in breaks.windows(2) {
        if w[1] > w[0] {
            total += integrate(integrand, w[0], w[1], cfg)?.value;
        }
    }
    let norm = gamma(p + 1.0)?;
    Ok(total / norm)
}

/// Expansion about `y = 1` in powers of `μ = ln y`; valid for `0 < y < 1` with
/// `|ln y| < 2π`, accurate here for `1 - y <= 10^-3`.
pub fn polylog_near_unity(y: f64, phi: f64) -> Result<f64> {
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::domain("polylog_near_unity", format!("needs 0 < y < 1, got {y}")));
    }
    let mu = y.ln();
    if !(mu.abs() < 2.0 * std::f64::consts::PI) {
        return Err(Error::domain("polylog_near_unity", "|ln y| must be below 2π"));
    }
    if let Some(v) = closed_form(y, phi) {
        return Ok(v);
    }
    let n = phi.round();
    let integer = phi == n;
    if integer && n <= 0.0 {
        return Err(Error::domain(
            "polylog_near_unity",
            format!("non-positive integer order {phi} has no expansion term here"),
        ));
    }
    let neg_mu = -mu;

    let mut sum = if integer {
        0.0
    } else {
        gamma_unchecked(1.0 - phi) * neg_mu.powf(phi - 1.0)
    };
    let log_index = if integer { Some(n as usize - 1) } else { None };
    let mut mu_pow = 1.0; // μ^k / k!
    let mut small_run = 0;
    for k in 0..80usize {
        if k > 0 {
            mu_pow *= mu / k as f64;
        }
        let term = if Some(k) == log_index {
            let harmonic: f64 = (1..=k).map(|j| 1.0 / j as f64).sum();
            mu_pow * (harmonic - neg_mu.ln())
        } else {
            mu_pow * zeta_unchecked(phi - k as f64)
        };
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            small_run += 1;
            if small_run >= 3 && log_index.is_none_or(|j| k > j) {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::Convergence {
        what: "polylog near-unity expansion",
        detail: format!("y = {y}, φ = {phi}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        if b == 0.0 {
            a.abs()
        } else {
            ((a - b) / b).abs()
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(polylog(0.0, 2.5).unwrap(), 0.0);
        assert!(rel(polylog(0.5, 1.0).unwrap(), std::f64::consts::LN_2) < 1e-15);
        assert!(rel(polylog(0.9, -1.0).unwrap(), 90.0) < 1e-13);
        assert!(rel(polylog(-1.0, 1.0).unwrap(), -std::f64::consts::LN_2) < 1e-15);
    }

    #[test]
    fn step_down_examples() {
        assert!(rel(polylog_step_down(0.5, 1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel(polylog_step_down(0.25, 0.0).unwrap(), 0.25 / 0.5625) < 1e-14);
        let direct = polylog(-0.7, 0.5).unwrap();
        assert!(rel(polylog_step_down(-0.7, 1.5).unwrap(), direct) < 1e-7);
    }

    #[test]
    fn domain_errors() {
        assert!(polylog(1.0, 2.0).is_err());
        assert!(polylog(1.5, 2.0).is_err());
        assert!(polylog(0.5, -1.5).is_err());
        assert!(polylog(f64::NAN, 2.0).is_err());
        assert!(polylog(0.5, -1.0).is_ok());
    }

    #[test]
    fn regime_selection() {
        assert_eq!(regime(0.3, 2.5), Regime::Series);
        assert_eq!(regime(-3.0, 2.5), Regime::Integral);
        assert_eq!(regime(0.8, 2.5), Regime::Integral);
        assert_eq!(regime(0.9995, 2.5), Regime::NearUnity);
        assert_eq!(regime(0.9995, 2.00001), Regime::Integral);
        assert_eq!(regime(0.9995, 1.0), Regime::ClosedForm);
    }

    #[test]
    fn mpmath_reference_values() {
        // mpmath.polylog(φ, y) at 40 digits
        let table = [
            (-3.0, 2.5, -2.162_700_712_002_056_7),
            (0.3, 2.5, 0.317_948_969_478_329_62),
            (0.8, 1.5, 1.258_570_371_523_832_6),
            (0.8, -0.5, 8.205_534_225_765_720_1),
            (-10_000.0, 3.5, -238.798_524_403_507_52),
            (-0.9, 0.5, -0.565_525_948_458_652_77),
            (0.9995, 1.5, 2.533_829_225_592_065_8),
            (0.9995, -0.5, 79_236.612_504_420_948),
            (0.9995, 2.0, 1.640_632_602_674_932_5),
            (0.999_999, 0.5, 1_770.993_053_465_516_7),
            (0.6, 4.0, 0.625_851_669_503_663_9),
        ];
        for (y, phi, want) in table {
            let got = polylog(y, phi).unwrap();
            assert!(rel(got, want) < 1e-10, "Li({y}, {phi}) = {got}, want {want}");
        }
    }
}
