use std::f64::consts::{LN_2, PI};
use std::sync::OnceLock;

use super::gamma::gamma_unchecked;
use crate::error::{Error, Result};

const BORWEIN_N: usize = 32;

/// Borwein's weights `d_k`, normalised by `d_n`.
fn borwein_weights() -> &'static [f64; BORWEIN_N + 1] {
    static WEIGHTS: OnceLock<[f64; BORWEIN_N + 1]> = OnceLock::new();
    WEIGHTS.get_or_init(|| {
        let n = BORWEIN_N as f64;
        let mut d = [0.0; BORWEIN_N + 1];
        let mut term = 1.0 / n;
        let mut acc = term;
        d[0] = n * acc;
        for i in 1..=BORWEIN_N {
            let fi = i as f64;
            term *= 4.0 * (n + fi - 1.0) * (n - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
            acc += term;
            d[i] = n * acc;
        }
        let dn = d[BORWEIN_N];
        d.iter_mut().for_each(|v| *v /= dn);
        d
    })
}

/// Riemann zeta function for real `s != 1`.
///
/// For `s >= 1/2` the alternating (Dirichlet eta) series is summed with Borwein's
/// acceleration; smaller arguments use the functional equation.
pub fn zeta(s: f64) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::domain("zeta", format!("argument must be finite, got {s}")));
    }
    if s == 1.0 {
        return Err(Error::domain("zeta", "pole at s = 1"));
    }
    Ok(zeta_unchecked(s))
}

pub(crate) fn zeta_unchecked(s: f64) -> f64 {
    if s == 0.0 {
        return -0.5;
    }
    if s < 0.0 && s == s.floor() && (s as i64) % 2 == 0 {
        return 0.0;
    }
    if s >= 0.5 {
        // beyond this the series is 1 + 2^-s + ... to machine precision
        if s > 60.0 {
            return 1.0 + 2f64.powf(-s);
        }
        return eta_borwein(s) / (-((1.0 - s) * LN_2).exp_m1());
    }
    let one_minus = 1.0 - s;
    2f64.powf(s)
        * PI.powf(s - 1.0)
        * (0.5 * PI * s).sin()
        * gamma_unchecked(one_minus)
        * zeta_unchecked(one_minus)
}

fn eta_borwein(s: f64) -> f64 {
    let d = borwein_weights();
    let mut sum = 0.0;
    for k in 0..BORWEIN_N {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * (d[k] - 1.0) / ((k + 1) as f64).powf(s);
    }
    -sum
}
