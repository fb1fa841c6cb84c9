//! Cross-validation suites: every closed form checked against an independent
//! numerical route.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::gas::{
    det_bundle, geometry_sample, limit_coefficients, limit_curvature, GasModel, Statistics,
    ThermoPoint,
};
use crate::gibbs::{
    curvature_from_jet_det, curvature_from_jet_riemann, fock_moments, hessian_metric,
    jacobian_metric, legendre_entropy, metric_jet, FockEnsembleSpec, LagrangeCoords, MetricField,
    DEFAULT_GRADIENT_STEP, DEFAULT_HESSIAN_STEP,
};
use crate::special::polylog::{polylog_integral, polylog_near_unity, polylog_series};
use crate::special::{gamma, polylog};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Fast,
    /// Adds denser grids and the checks at `ξ = 1 - 10⁻⁶`.
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub tolerance: f64,
    /// Largest deviation seen; its meaning (relative, absolute, bound) is per suite.
    pub max_deviation: f64,
    pub checks: usize,
    pub passed: bool,
    /// First few failing checks.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub level: Level,
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }
}

/// Curvature as a function of model and point; [`fd_negativity`] takes it as a
/// parameter so a deliberately broken formula can be fed in.
pub type CurvatureFn<'a> = &'a dyn Fn(&GasModel, ThermoPoint) -> Result<f64>;

const MAX_LISTED_FAILURES: usize = 5;

struct Tally {
    name: &'static str,
    tolerance: f64,
    max_deviation: f64,
    checks: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Tally {
            name,
            tolerance,
            max_deviation: 0.0,
            checks: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < MAX_LISTED_FAILURES {
            self.failures.push(msg);
        }
    }

    /// Records a deviation that passes when it is at most the tolerance.
    fn deviation(&mut self, dev: f64, label: impl FnOnce() -> String) {
        self.outcome(dev, dev <= self.tolerance, label);
    }

    fn outcome(&mut self, dev: f64, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if dev.is_nan() {
            self.max_deviation = f64::NAN;
        } else if !self.max_deviation.is_nan() {
            self.max_deviation = self.max_deviation.max(dev);
        }
        if !ok || dev.is_nan() {
            self.fail(format!("{}: deviation {dev:e}", label()));
        }
    }

    fn result<T>(&mut self, r: Result<T>, label: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.fail(format!("{}: {e}", label()));
                None
            }
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            tolerance: self.tolerance,
            max_deviation: self.max_deviation,
            checks: self.checks,
            passed: self.failed == 0 && self.checks > 0,
            failures: self.failures,
        }
    }
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(f64::MIN_POSITIVE)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    linspace(lo.ln(), hi.ln(), n).into_iter().map(f64::exp).collect()
}

fn model(st: Statistics, eta: f64) -> GasModel {
    GasModel::new(st, eta, 1.0).expect("valid model parameters")
}

fn point(beta: f64, xi: f64) -> ThermoPoint {
    ThermoPoint::new(beta, xi).expect("valid grid point")
}

pub fn run(level: Level) -> VerifyReport {
    let mut suites = vec![
        polylog_closed_forms(),
        polylog_derivative_identity(level),
        polylog_series_vs_quadrature(),
        fock_covariance_identity(level),
        fock_entropy_identity(level),
        metric_oracle_equivalence(level),
        curvature_route_equivalence(level),
        curvature_closed_form(level),
        classical_flatness(),
        fd_negativity(&|m, p| geometry_sample(m, p).map(|s| s.r)),
        low_fugacity_constants(),
        low_fugacity_asymptotics(),
        low_fugacity_limit(),
        condensation_edge(level),
    ];
    if level == Level::Full {
        suites.push(near_unity_expansion());
    }
    VerifyReport { level, suites }
}

/// Orders 1, 0, -1 against the elementary functions, evaluated by quadrature
/// and (inside its radius) by the series.
pub fn polylog_closed_forms() -> SuiteReport {
    let mut t = Tally::new("polylog closed forms", 1e-10);
    let elementary = |y: f64, phi: f64| -> f64 {
        match phi as i32 {
            1 => -(-y).ln_1p(),
            0 => y / (1.0 - y),
            _ => y / ((1.0 - y) * (1.0 - y)),
        }
    };
    for phi in [1.0, 0.0, -1.0] {
        for y in [-7.5, -2.0, -0.8, -0.3, -1e-3, 0.2, 0.45, 0.7, 0.95] {
            let want = elementary(y, phi);
            if let Some(v) = t.result(polylog_integral(y, phi), || format!("quadrature Li({y}, {phi})")) {
                t.deviation(rel(v, want), || format!("quadrature Li({y}, {phi})"));
            }
            if y.abs() <= 0.5 {
                if let Some(v) = t.result(polylog_series(y, phi), || format!("series Li({y}, {phi})")) {
                    t.deviation(rel(v, want), || format!("series Li({y}, {phi})"));
                }
            }
            if let Some(v) = t.result(polylog(y, phi), || format!("Li({y}, {phi})")) {
                t.deviation(rel(v, want), || format!("Li({y}, {phi})"));
            }
        }
    }
    t.finish()
}

/// `d/dy Li(y, φ) = Li(y, φ - 1) / y` with the derivative taken by a
/// five-point central difference, at pseudo-random points.
pub fn polylog_derivative_identity(level: Level) -> SuiteReport {
    let mut t = Tally::new("polylog derivative identity", 1e-6);
    let count = if level == Level::Full { 1000 } else { 100 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..count {
        let y: f64 = rng.random_range(-6.0..0.97);
        let phi: f64 = rng.random_range(0.2..4.5);
        if y.abs() < 1e-3 {
            continue;
        }
        let h = 1e-3 * y.abs().min(1.0 - y);
        let li = |x: f64| polylog(x, phi);
        let label = || format!("y = {y}, φ = {phi}");
        let stencil = (|| -> Result<f64> {
            Ok((li(y - 2.0 * h)? - 8.0 * li(y - h)? + 8.0 * li(y + h)? - li(y + 2.0 * h)?)
                / (12.0 * h))
        })();
        let Some(derivative) = t.result(stencil, label) else { continue };
        let Some(lower) = t.result(polylog(y, phi - 1.0), label) else { continue };
        t.deviation(rel(derivative, lower / y), label);
    }
    t.finish()
}

pub fn polylog_series_vs_quadrature() -> SuiteReport {
    let mut t = Tally::new("polylog series vs quadrature", 1e-9);
    for phi in [-0.9, -0.5, 0.3, 0.5, 1.5, 2.5, 3.7] {
        for y in linspace(-0.5, 0.5, 11) {
            if y == 0.0 {
                continue;
            }
            let label = || format!("Li({y}, {phi})");
            let (Some(s), Some(q)) = (
                t.result(polylog_series(y, phi), label),
                t.result(polylog_integral(y, phi), label),
            ) else {
                continue;
            };
            t.deviation(rel(q, s), label);
        }
    }
    t.finish()
}

/// Small Fock spaces, all enumerable well within the state bound.
pub fn fock_fixtures(level: Level) -> Vec<(FockEnsembleSpec, LagrangeCoords)> {
    let be_cap = if level == Level::Full { 200 } else { 60 };
    let fd = |e: &[f64]| FockEnsembleSpec::fermi(e.to_vec()).expect("valid fixture");
    let be = |e: &[f64], cap| FockEnsembleSpec::bose(e.to_vec(), cap).expect("valid fixture");
    vec![
        (fd(&[0.3, 0.9, 1.4]), LagrangeCoords::from_beta_xi(1.0, 0.7)),
        (fd(&[0.0, 0.5, 1.1, 1.7, 2.3, 3.0]), LagrangeCoords::from_beta_xi(0.8, 2.0)),
        (fd(&[0.2, 0.2, 1.0, 1.0, 2.5]), LagrangeCoords::from_beta_xi(1.5, 0.4)),
        (be(&[0.5, 1.2], 200), LagrangeCoords::from_beta_xi(1.0, 0.6)),
        (be(&[0.4, 1.0, 1.9], be_cap), LagrangeCoords::from_beta_xi(1.2, 0.5)),
    ]
}

/// The enumerated covariance of `(energy, particle number)` equals the
/// negative Hessian of the free energy.
pub fn fock_covariance_identity(level: Level) -> SuiteReport {
    let mut t = Tally::new("covariance equals Hessian of log Z", 1e-8);
    for (spec, at) in fock_fixtures(level) {
        let label = || format!("{:?} levels {:?}", spec.statistics(), spec.energies());
        let Some(m) = t.result(fock_moments(&spec, at), label) else { continue };
        let Some(h) = t.result(hessian_metric(&spec, at, DEFAULT_HESSIAN_STEP), label) else {
            continue;
        };
        t.deviation(h.metric.max_rel_diff(&m.covariance), label);
    }
    t.finish()
}

/// The state-by-state entropy equals the Legendre transform of the free energy.
pub fn fock_entropy_identity(level: Level) -> SuiteReport {
    let mut t = Tally::new("entropy equals Legendre transform", 1e-8);
    for (spec, at) in fock_fixtures(level) {
        let label = || format!("{:?} levels {:?}", spec.statistics(), spec.energies());
        let Some(m) = t.result(fock_moments(&spec, at), label) else { continue };
        let Some(s) = t.result(legendre_entropy(&spec, at, DEFAULT_GRADIENT_STEP), label) else {
            continue;
        };
        t.deviation(rel(s, m.entropy), label);
    }
    t.finish()
}

/// `(β, ξ)` grid used by the oracle-equivalence suites.
pub fn oracle_grid(st: Statistics, level: Level) -> Vec<(f64, f64)> {
    let n = if level == Level::Full { 8 } else { 5 };
    let betas = logspace(0.3, 3.0, n);
    let xis = match st {
        Statistics::FermiDirac => logspace(0.05, 5.0, n),
        Statistics::ClassicalIdeal => logspace(0.1, 3.0, n),
        _ => linspace(0.05, 0.85, n),
    };
    betas
        .iter()
        .flat_map(|&b| xis.iter().map(move |&x| (b, x)))
        .collect()
}

/// Closed-form metric against the finite-difference Hessian of the free energy,
/// or for Bose-Einstein with ground state the Jacobian of the averages.
pub fn metric_oracle_equivalence(level: Level) -> SuiteReport {
    let mut t = Tally::new("metric oracle equivalence", 1e-6);
    for st in Statistics::ALL {
        for eta in [0.5, 2.0] {
            let m = model(st, eta);
            for (beta, xi) in oracle_grid(st, level) {
                let at = LagrangeCoords::from_beta_xi(beta, xi);
                let label = || format!("{st} η = {eta} β = {beta} ξ = {xi}");
                let Some(closed) = t.result(m.metric(at), label) else { continue };
                let oracle = if st == Statistics::BoseEinstein {
                    jacobian_metric(&m, at, DEFAULT_GRADIENT_STEP)
                } else {
                    hessian_metric(&m, at, DEFAULT_HESSIAN_STEP)
                };
                let Some(oracle) = t.result(oracle, label) else { continue };
                t.deviation(oracle.metric.max_rel_diff(&closed), label);
            }
        }
    }
    t.finish()
}

const CURVED: [Statistics; 3] = [
    Statistics::FermiDirac,
    Statistics::BoseEinstein,
    Statistics::BoseEinsteinNoGround,
];

/// Determinant formula against the Riemann-tensor contraction, both on the
/// numerically differentiated closed-form metric.
pub fn curvature_route_equivalence(level: Level) -> SuiteReport {
    let mut t = Tally::new("curvature routes agree", 1e-5);
    for st in CURVED {
        for eta in [0.5, 2.0] {
            let m = model(st, eta);
            for (beta, xi) in oracle_grid(st, level) {
                let at = LagrangeCoords::from_beta_xi(beta, xi);
                let label = || format!("{st} η = {eta} β = {beta} ξ = {xi}");
                let Some(jet) = t.result(metric_jet(&m, at, DEFAULT_GRADIENT_STEP), label) else {
                    continue;
                };
                let (Some(d), Some(r)) = (
                    t.result(curvature_from_jet_det(&jet), label),
                    t.result(curvature_from_jet_riemann(&jet), label),
                ) else {
                    continue;
                };
                t.deviation(rel(d, r), label);
            }
        }
    }
    t.finish()
}

/// Numerical curvature against the closed-form determinant-bundle expression.
pub fn curvature_closed_form(level: Level) -> SuiteReport {
    let mut t = Tally::new("closed-form curvature", 1e-4);
    for st in CURVED {
        for eta in [0.5, 2.0] {
            let m = model(st, eta);
            for (beta, xi) in oracle_grid(st, level) {
                let at = LagrangeCoords::from_beta_xi(beta, xi);
                let label = || format!("{st} η = {eta} β = {beta} ξ = {xi}");
                let Some(s) = t.result(geometry_sample(&m, point(beta, xi)), label) else {
                    continue;
                };
                let Some(jet) = t.result(metric_jet(&m, at, DEFAULT_GRADIENT_STEP), label) else {
                    continue;
                };
                let (Some(d), Some(r)) = (
                    t.result(curvature_from_jet_det(&jet), label),
                    t.result(curvature_from_jet_riemann(&jet), label),
                ) else {
                    continue;
                };
                t.deviation(rel(d, s.r).max(rel(r, s.r)), label);
            }
        }
    }
    t.finish()
}

/// The classical gas is flat: exactly in closed form and to the finite-difference
/// noise floor numerically. Deviation is absolute.
pub fn classical_flatness() -> SuiteReport {
    let mut t = Tally::new("classical flatness", 1e-8);
    for eta in [0.5, 2.0] {
        let m = model(Statistics::ClassicalIdeal, eta);
        for beta in linspace(0.5, 5.0, 10) {
            for xi in linspace(0.1, 3.0, 10) {
                let label = || format!("η = {eta} β = {beta} ξ = {xi}");
                if let Some(s) = t.result(geometry_sample(&m, point(beta, xi)), label) {
                    t.outcome(s.r.abs(), s.r == 0.0, label);
                }
                let at = LagrangeCoords::from_beta_xi(beta, xi);
                let Some(jet) = t.result(metric_jet(&m, at, DEFAULT_GRADIENT_STEP), label) else {
                    continue;
                };
                if let Some(r) = t.result(curvature_from_jet_det(&jet), label) {
                    t.deviation(r.abs(), label);
                }
                if let Some(r) = t.result(curvature_from_jet_riemann(&jet), label) {
                    t.deviation(r.abs(), label);
                }
            }
        }
    }
    t.finish()
}

/// `(η, β, ξ)` grid on which the Fermi-Dirac curvature must be negative.
pub fn fd_negativity_grid() -> Vec<(f64, f64, f64)> {
    let betas = logspace(0.1, 10.0, 20);
    let xis: Vec<f64> = (1..=50).map(|i| 0.1 * i as f64).collect();
    let mut out = Vec::with_capacity(2 * betas.len() * xis.len());
    for eta in [0.5, 2.0] {
        for &b in &betas {
            for &x in &xis {
                out.push((eta, b, x));
            }
        }
    }
    out
}

/// Fermi-Dirac curvature is negative everywhere on the grid. The reported
/// deviation is the largest curvature seen; it must stay below zero.
pub fn fd_negativity(curvature: CurvatureFn<'_>) -> SuiteReport {
    let mut t = Tally::new("Fermi-Dirac curvature negative", 0.0);
    t.max_deviation = f64::NEG_INFINITY;
    for (eta, beta, xi) in fd_negativity_grid() {
        let m = model(Statistics::FermiDirac, eta);
        let label = || format!("η = {eta} β = {beta} ξ = {xi}");
        if let Some(r) = t.result(curvature(&m, point(beta, xi)), label) {
            t.outcome(r, r < 0.0, label);
        }
    }
    t.finish()
}

/// Reference low-fugacity constants at `η = 1/2`; absolute deviation.
pub fn low_fugacity_constants() -> SuiteReport {
    let mut t = Tally::new("low-fugacity constants", 1e-3);
    let label = || "η = 1/2".to_string();
    if let Some(c) = t.result(limit_coefficients(0.5), label) {
        for (name, got, want) in [
            ("f", c.f, 1.178),
            ("f_c", c.f_c, 3.323),
            ("h", c.h, -0.6921),
            ("h_c", c.h_c, -5.321),
        ] {
            t.deviation((got - want).abs(), || name.to_string());
        }
    }
    for eta in [-0.5, 0.5, 1.0, 2.0, 3.7] {
        let label = || format!("f = Γ(η+1)Γ(η+2) at η = {eta}");
        let Some(c) = t.result(limit_coefficients(eta), label) else { continue };
        let Some(g) = t.result(gamma(eta + 1.0).and_then(|a| Ok(a * gamma(eta + 2.0)?)), label) else {
            continue;
        };
        t.deviation(rel(c.f, g), label);
    }
    t.finish()
}

/// The bundles scaled by `x⁻²` and `x⁻⁴`, extrapolated to `x = 0` from
/// `|x| = 10⁻³, 10⁻⁴`, reproduce the limit coefficients.
pub fn low_fugacity_asymptotics() -> SuiteReport {
    let mut t = Tally::new("determinant bundle asymptotics", 1e-3);
    for eta in [0.5, 2.0] {
        let label = || format!("η = {eta}");
        let Some(c) = t.result(limit_coefficients(eta), label) else { continue };
        for sign in [-1.0, 1.0] {
            let (x1, x2) = (sign * 1e-3, sign * 1e-4);
            let (Some(b1), Some(b2)) = (
                t.result(det_bundle(x1, eta), label),
                t.result(det_bundle(x2, eta), label),
            ) else {
                continue;
            };
            // leading correction is linear in x
            let extrapolate = |v1: f64, v2: f64| (10.0 * v2 - v1) / 9.0;
            let a = extrapolate(b1.a / (x1 * x1), b2.a / (x2 * x2));
            let b = extrapolate(b1.b / x1.powi(4), b2.b / x2.powi(4));
            t.deviation(rel(a, c.f), || format!("A at η = {eta}, x = {x1:e}"));
            t.deviation(rel(b, c.h), || format!("B at η = {eta}, x = {x1:e}"));
            if let (Some(ac1), Some(ac2), Some(bc1), Some(bc2)) = (b1.a_c, b2.a_c, b1.b_c, b2.b_c) {
                let ac = extrapolate(ac1 / (x1 * x1), ac2 / (x2 * x2));
                let bc = extrapolate(bc1 / x1.powi(4), bc2 / x2.powi(4));
                t.deviation(rel(ac, c.f_c), || format!("A_c at η = {eta}"));
                t.deviation(rel(bc, c.h_c), || format!("B_c at η = {eta}"));
            }
        }
    }
    t.finish()
}

/// Limit curvature against the full expression at `ξ = 10⁻⁵`.
pub fn low_fugacity_limit() -> SuiteReport {
    let mut t = Tally::new("low-fugacity curvature limit", 1e-3);
    for st in [Statistics::FermiDirac, Statistics::BoseEinstein] {
        for eta in [0.5, 2.0] {
            let m = model(st, eta);
            for beta in [0.5, 1.0, 2.0] {
                let label = || format!("{st} η = {eta} β = {beta}");
                let (Some(lim), Some(s)) = (
                    t.result(limit_curvature(&m, beta), label),
                    t.result(geometry_sample(&m, point(beta, 1e-5)), label),
                ) else {
                    continue;
                };
                t.deviation(rel(lim, s.r), label);
            }
        }
    }
    t.finish()
}

/// Near `ξ = 1` the curvature without the ground state grows without bound
/// while the ground-state-corrected curvature goes to zero. Deviation is
/// `|R|` with the ground state at the closest point, against a bound of 10⁻².
/// The full level goes down to `ξ = 1 - 10⁻⁶` and requires `R > 100` without
/// the ground state before that point.
pub fn condensation_edge(level: Level) -> SuiteReport {
    let mut t = Tally::new("condensation edge", 1e-2);
    let mut gaps: Vec<f64> = (1..=8).map(|k| 10f64.powf(-0.5 * k as f64)).collect();
    if level == Level::Full {
        gaps.extend([10f64.powf(-4.5), 1e-5, 10f64.powf(-5.5), 1.5e-6, 1e-6]);
    }
    let bare = model(Statistics::BoseEinsteinNoGround, 0.5);
    let full = model(Statistics::BoseEinstein, 0.5);
    let mut r0 = Vec::new();
    let mut r = Vec::new();
    for &gap in &gaps {
        let xi = 1.0 - gap;
        let label = || format!("ξ = 1 - {gap:e}");
        if let (Some(a), Some(b)) = (
            t.result(geometry_sample(&bare, point(1.0, xi)), label),
            t.result(geometry_sample(&full, point(1.0, xi)), label),
        ) {
            r0.push(a.r);
            r.push(b.r);
        }
    }
    if r0.len() != gaps.len() {
        return t.finish();
    }
    let increasing = r0.windows(2).all(|w| w[1] > w[0]);
    t.outcome(0.0, increasing, || "R without ground state increases toward ξ = 1".into());
    let (first, last) = (r0[0], r0[r0.len() - 1]);
    t.outcome(0.0, last > 10.0 * first, || format!("R without ground state only grows to {last:e}"));
    if level == Level::Full {
        let before_edge = r0[..r0.len() - 1].iter().any(|&v| v > 1e2);
        t.outcome(0.0, before_edge, || "R without ground state stays below 100 before ξ = 1 - 1e-6".into());
    }
    let tail = &r[r.len() / 2..];
    let shrinking = tail.windows(2).all(|w| w[1].abs() < w[0].abs());
    t.outcome(0.0, shrinking, || "R with ground state decreases toward 0".into());
    let closest = gaps[gaps.len() - 1];
    t.deviation(r[r.len() - 1].abs(), || format!("|R| with ground state at ξ = 1 - {closest:e}"));
    t.finish()
}

/// The expansion about `y = 1` against direct quadrature just inside its range.
pub fn near_unity_expansion() -> SuiteReport {
    let mut t = Tally::new("near-unity expansion vs quadrature", 1e-9);
    for phi in [-0.5, 0.5, 1.5, 2.5, 3.5, 4.0, 2.0] {
        for gap in [1e-3, 5e-4, 1e-4, 1e-5, 1e-6] {
            let y = 1.0 - gap;
            let label = || format!("Li(1 - {gap:e}, {phi})");
            let (Some(e), Some(q)) = (
                t.result(polylog_near_unity(y, phi), label),
                t.result(polylog_integral(y, phi), label),
            ) else {
                continue;
            };
            t.deviation(rel(e, q), label);
        }
    }
    t.finish()
}
