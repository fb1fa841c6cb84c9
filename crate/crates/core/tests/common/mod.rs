//! Independent reference values for the integration tests: double-exponential
//! quadrature of the original Bose and Fermi energy integrals. Nothing here
//! calls the polylogarithm or gamma function of the library.

#![allow(dead_code)]

use qgeom::gas::Statistics;

/// `∫_0^∞ f(u) du` by exp-sinh quadrature, `u = exp(π/2 · sinh t)`, halving
/// the step until the trapezoid sum settles.
pub fn de_integral(f: impl Fn(f64) -> f64) -> f64 {
    let (t_lo, t_hi) = (-6.5f64, 4.5f64);
    let node = |t: f64| -> f64 {
        let s = std::f64::consts::FRAC_PI_2 * t.sinh();
        let u = s.exp();
        let w = u * std::f64::consts::FRAC_PI_2 * t.cosh();
        let v = f(u) * w;
        if v.is_finite() { v } else { 0.0 }
    };
    let mut h = 0.25;
    let mut sum: f64 = {
        let n = ((t_hi - t_lo) / h).round() as i64;
        (0..=n).map(|k| node(t_lo + k as f64 * h)).sum()
    };
    let mut estimate = sum * h;
    for _ in 0..10 {
        // add the midpoints of the current grid
        let n = ((t_hi - t_lo) / h).round() as i64;
        let mids: f64 = (0..n).map(|k| node(t_lo + (k as f64 + 0.5) * h)).sum();
        sum += mids;
        h *= 0.5;
        let next = sum * h;
        if (next - estimate).abs() <= 1e-15 * next.abs() {
            return next;
        }
        estimate = next;
    }
    estimate
}

pub fn gamma_oracle(s: f64) -> f64 {
    de_integral(|u| u.powf(s - 1.0) * (-u).exp())
}

/// `1 - y e^{-u}` without cancellation for `y` close to 1 and small `u`.
fn one_minus(y: f64, u: f64) -> f64 {
    if y > 0.0 {
        -(y.ln() - u).exp_m1()
    } else {
        1.0 - y * (-u).exp()
    }
}

/// `Li(y, φ)` from its Bose integral; needs `φ > 0` and `y < 1`.
pub fn polylog_oracle(y: f64, phi: f64) -> f64 {
    de_integral(|u| u.powf(phi - 1.0) * y * (-u).exp() / one_minus(y, u)) / gamma_oracle(phi)
}

/// Mean occupation and its second and third cumulants at reduced energy `u = βε`.
fn cumulants(st: Statistics, xi: f64, u: f64) -> (f64, f64, f64) {
    let z = xi * (-u).exp();
    match st {
        Statistics::FermiDirac => {
            let n = z / (1.0 + z);
            (n, n * (1.0 - n), n * (1.0 - n) * (1.0 - 2.0 * n))
        }
        Statistics::BoseEinstein | Statistics::BoseEinsteinNoGround => {
            let n = z / one_minus(xi, u);
            (n, n * (1.0 + n), n * (1.0 + n) * (1.0 + 2.0 * n))
        }
        Statistics::ClassicalIdeal => (z, z, z),
    }
}

/// `log` of the one-level grand partition function.
fn log_z1(st: Statistics, xi: f64, u: f64) -> f64 {
    let z = xi * (-u).exp();
    match st {
        Statistics::FermiDirac => z.ln_1p(),
        Statistics::BoseEinstein | Statistics::BoseEinsteinNoGround => -one_minus(xi, u).ln(),
        Statistics::ClassicalIdeal => z,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Reference {
    pub free_energy: f64,
    pub energy: f64,
    pub particles: f64,
    /// `(g11, g12, g22)`
    pub metric: [f64; 3],
    /// `∂g/∂β` and `∂g/∂λ²`, each as `(11, 12, 22)`.
    pub d1: [f64; 3],
    pub d2: [f64; 3],
}

/// Thermodynamics and metric of a gas with density of states `κ ε^η` from the
/// energy integrals; Bose-Einstein with ground state adds the single
/// zero-energy level by hand.
pub fn reference(st: Statistics, eta: f64, kappa: f64, beta: f64, xi: f64) -> Reference {
    // κ ∫ ε^(η+k) g(βε) dε = κ β^-(η+k+1) ∫ u^(η+k) g(u) du
    let moment = |k: f64, g: &dyn Fn(f64) -> f64| -> f64 {
        kappa * beta.powf(-(eta + k + 1.0)) * de_integral(|u| u.powf(eta + k) * g(u))
    };
    let n = |u: f64| cumulants(st, xi, u).0;
    let v = |u: f64| cumulants(st, xi, u).1;
    let w = |u: f64| cumulants(st, xi, u).2;
    let log_z = moment(0.0, &|u| log_z1(st, xi, u));
    let mut r = Reference {
        free_energy: -log_z,
        energy: moment(1.0, &n),
        particles: moment(0.0, &n),
        metric: [moment(2.0, &v), moment(1.0, &v), moment(0.0, &v)],
        d1: [-moment(3.0, &w), -moment(2.0, &w), -moment(1.0, &w)],
        d2: [-moment(2.0, &w), -moment(1.0, &w), -moment(0.0, &w)],
    };
    if st == Statistics::BoseEinstein {
        let gap = 1.0 - xi;
        r.free_energy += gap.ln();
        r.particles += xi / gap;
        r.metric[2] += xi / (gap * gap);
        r.d2[2] -= xi * (1.0 + xi) / (gap * gap * gap);
    }
    r
}

/// Scalar curvature of a two-dimensional Hessian metric from its first
/// derivatives, with the convention that the unit sphere has `R = 2`.
pub fn curvature_oracle(r: &Reference) -> f64 {
    let [a, b, c] = r.metric;
    let m = [r.metric, r.d1, r.d2];
    let det3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    let det_g = a * c - b * b;
    -det3 / (2.0 * det_g * det_g)
}

pub fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}
