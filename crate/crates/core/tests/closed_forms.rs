//! Closed forms against quadrature of the energy integrals they come from.

mod common;

use common::*;
use qgeom::gas::{
    averages, free_energy, free_energy_ground_corrected, geometry_sample, metric, GasModel,
    Statistics, ThermoPoint,
};
use qgeom::special::{gamma, polylog, zeta};

fn model(st: Statistics, eta: f64, kappa: f64) -> GasModel {
    GasModel::new(st, eta, kappa).unwrap()
}

fn pt(beta: f64, xi: f64) -> ThermoPoint {
    ThermoPoint::new(beta, xi).unwrap()
}

fn points(st: Statistics) -> Vec<(f64, f64)> {
    let xis: &[f64] = match st {
        Statistics::FermiDirac => &[1e-3, 0.3, 1.0, 3.0, 12.0],
        Statistics::ClassicalIdeal => &[0.01, 0.5, 2.0],
        _ => &[1e-3, 0.3, 0.7, 0.95],
    };
    [0.4, 1.0, 2.5]
        .iter()
        .flat_map(|&b| xis.iter().map(move |&x| (b, x)))
        .collect()
}

#[test]
fn oracle_self_check() {
    assert!(rel(gamma_oracle(0.5), std::f64::consts::PI.sqrt()) < 1e-13);
    assert!(rel(gamma_oracle(4.0), 6.0) < 1e-13);
    assert!(rel(polylog_oracle(-1.0, 1.0), -std::f64::consts::LN_2) < 1e-13);
}

#[test]
fn special_functions_match_integrals() {
    for s in [0.3, 0.5, 1.7, 3.25, 6.5] {
        let g = gamma(s).unwrap();
        assert!(rel(g, gamma_oracle(s)) < 1e-12, "Γ({s})");
    }
    for s in [2.0, 2.5, 3.0, 4.0] {
        // ζ(s) = Li(1, s), approached from below
        let z = zeta(s).unwrap();
        let li = polylog_oracle(1.0 - 1e-12, s);
        assert!(rel(z, li) < 1e-9, "ζ({s}): {z} vs {li}");
    }
    for phi in [0.3, 0.5, 1.0, 1.5, 2.0, 2.5, 3.5, 4.0] {
        for y in [-30.0, -4.0, -1.0, -0.6, -0.2, 0.1, 0.4, 0.6, 0.9, 0.999, 0.999_99] {
            let got = polylog(y, phi).unwrap();
            let want = polylog_oracle(y, phi);
            assert!(rel(got, want) < 1e-10, "Li({y}, {phi}) = {got}, want {want}");
        }
    }
}

#[test]
fn thermodynamics_match_integrals() {
    for st in Statistics::ALL {
        for eta in [-0.4, 0.5, 2.0] {
            let m = model(st, eta, 1.7);
            for (beta, xi) in points(st) {
                let r = reference(st, eta, 1.7, beta, xi);
                let p = pt(beta, xi);
                let a = averages(&m, p).unwrap();
                let tag = format!("{st} η = {eta} β = {beta} ξ = {xi}");
                assert!(rel(a.energy, r.energy) < 1e-10, "U {tag}");
                assert!(rel(a.particles, r.particles) < 1e-10, "N {tag}");
                let f = free_energy_ground_corrected(&m, p).unwrap();
                assert!(rel(f, r.free_energy) < 1e-10, "F {tag}: {f} vs {}", r.free_energy);
                let g = metric(&m, p).unwrap();
                for (i, (got, want)) in g.as_array().iter().zip(r.metric).enumerate() {
                    assert!(rel(*got, want) < 1e-10, "g[{i}] {tag}: {got} vs {want}");
                }
            }
        }
    }
}

#[test]
fn curvature_matches_cumulant_oracle() {
    for st in [Statistics::FermiDirac, Statistics::BoseEinstein, Statistics::BoseEinsteinNoGround] {
        for eta in [0.5, 2.0] {
            for (beta, xi) in points(st) {
                let s = geometry_sample(&model(st, eta, 0.8), pt(beta, xi)).unwrap();
                let want = curvature_oracle(&reference(st, eta, 0.8, beta, xi));
                // the oracle loses digits to cancellation at the smallest ξ
                let tol = if xi < 0.01 { 1e-4 } else { 1e-8 };
                assert!(rel(s.r, want) < tol, "{st} η = {eta} β = {beta} ξ = {xi}: {} vs {want}", s.r);
            }
        }
    }
}

#[test]
fn bose_free_energy_example() {
    // η = 1/2, κ = 1, β = 1, ξ = 1/2: F = -Γ(3/2) Li(1/2, 5/2)
    let m = model(Statistics::BoseEinsteinNoGround, 0.5, 1.0);
    let f = free_energy(&m, pt(1.0, 0.5)).unwrap();
    let r = reference(Statistics::BoseEinsteinNoGround, 0.5, 1.0, 1.0, 0.5);
    assert!(rel(f, r.free_energy) < 1e-12);
    assert!(rel(f, -gamma(1.5).unwrap() * polylog(0.5, 2.5).unwrap()) < 1e-15);
}

#[test]
fn fermi_particle_number_example() {
    // η = 1/2, κ = 1, β = 2, ξ = 0.7
    let a = averages(&model(Statistics::FermiDirac, 0.5, 1.0), pt(2.0, 0.7)).unwrap();
    let r = reference(Statistics::FermiDirac, 0.5, 1.0, 2.0, 0.7);
    assert!(rel(a.particles, r.particles) < 1e-9);
    assert!(rel(a.energy, r.energy) < 1e-9);
}

#[test]
fn bare_free_energy_misses_only_the_ground_state() {
    let m = model(Statistics::BoseEinstein, 0.5, 1.0);
    let p = pt(1.0, 0.6);
    let bare = free_energy(&m, p).unwrap();
    let corrected = free_energy_ground_corrected(&m, p).unwrap();
    assert!((corrected - bare - (0.4f64).ln()).abs() < 1e-15);
}
