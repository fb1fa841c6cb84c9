//! Exact grand canonical enumeration over a finite list of single-particle levels.
//!
//! The prior over occupation-number states is uniform. Each state `x` has
//! sufficient statistics `a₁ = Σ εᵢ xᵢ` (energy) and `a₂ = Σ xᵢ` (particle
//! number) and weight `exp(-β a₁ - λ² a₂)`.

use super::coords::{Domain, LagrangeCoords};
use super::field::FreeEnergyField;
use super::metric::MetricTensor2;
use crate::error::{Error, Result};

/// Upper bound on the number of enumerated states.
pub const MAX_STATES: f64 = 1e7;
/// Default truncation of bosonic occupation numbers.
pub const DEFAULT_BE_CAP: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FockStatistics {
    FermiDirac,
    BoseEinstein,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FockEnsembleSpec {
    energies: Vec<f64>,
    statistics: FockStatistics,
    be_occupancy_cap: u32,
}

impl FockEnsembleSpec {
    pub fn new(energies: Vec<f64>, statistics: FockStatistics, be_occupancy_cap: u32) -> Result<Self> {
        if let Some(e) = energies.iter().find(|e| !(e.is_finite() && **e >= 0.0)) {
            return Err(Error::domain("fock ensemble", format!("level energies must be finite and >= 0, got {e}")));
        }
        if be_occupancy_cap < 1 {
            return Err(Error::domain("fock ensemble", "occupancy cap must be at least 1"));
        }
        let spec = FockEnsembleSpec {
            energies,
            statistics,
            be_occupancy_cap,
        };
        let states = spec.state_count();
        if states > MAX_STATES {
            return Err(Error::EnumerationTooLarge {
                states,
                limit: MAX_STATES,
            });
        }
        Ok(spec)
    }

    pub fn fermi(energies: Vec<f64>) -> Result<Self> {
        Self::new(energies, FockStatistics::FermiDirac, 1)
    }

    pub fn bose(energies: Vec<f64>, cap: u32) -> Result<Self> {
        Self::new(energies, FockStatistics::BoseEinstein, cap)
    }

    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    pub fn statistics(&self) -> FockStatistics {
        self.statistics
    }

    /// Highest occupation number per level.
    pub fn max_occupation(&self) -> u32 {
        match self.statistics {
            FockStatistics::FermiDirac => 1,
            FockStatistics::BoseEinstein => self.be_occupancy_cap,
        }
    }

    pub fn state_count(&self) -> f64 {
        (self.max_occupation() as f64 + 1.0).powi(self.energies.len() as i32)
    }

    /// `log Z` from the per-level product. For bosons this is the truncated
    /// geometric sum `Σ_{n=0}^{cap} z^n`, which is the model the enumeration samples.
    pub fn log_partition_product(&self, at: LagrangeCoords) -> f64 {
        let cap = self.max_occupation() as i32;
        self.energies
            .iter()
            .map(|&e| {
                let ln_z = -at.beta * e - at.lambda2;
                match self.statistics {
                    FockStatistics::FermiDirac => ln_z.exp().ln_1p(),
                    FockStatistics::BoseEinstein => {
                        let z = ln_z.exp();
                        if z == 1.0 {
                            ((cap + 1) as f64).ln()
                        } else {
                            // ln((1 - z^(cap+1)) / (1 - z)), stable on either side of z = 1
                            let top = ((cap + 1) as f64 * ln_z).exp_m1();
                            (top / ln_z.exp_m1()).ln()
                        }
                    }
                }
            })
            .sum()
    }

    /// Visits every occupation-number state with its sufficient statistics `(a₁, a₂)`.
    fn for_each_state(&self, mut visit: impl FnMut(f64, f64)) {
        let levels = self.energies.len();
        let cap = self.max_occupation();
        let mut occ = vec![0u32; levels];
        let (mut a1, mut a2) = (0.0f64, 0u64);
        loop {
            visit(a1, a2 as f64);
            // odometer increment, keeping a₁ and a₂ in step
            let mut i = 0;
            loop {
                if i == levels {
                    return;
                }
                if occ[i] < cap {
                    occ[i] += 1;
                    a1 += self.energies[i];
                    a2 += 1;
                    break;
                }
                a1 -= self.energies[i] * occ[i] as f64;
                a2 -= occ[i] as u64;
                occ[i] = 0;
                i += 1;
            }
            // rebuild a₁ after each carry to avoid drift from repeated add/subtract
            if i > 0 {
                a1 = occ.iter().zip(&self.energies).map(|(&n, &e)| n as f64 * e).sum();
            }
        }
    }
}

/// Neumaier-compensated sum.
#[derive(Default, Clone, Copy)]
struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockLogPartition {
    /// Per-level product form (truncated for bosons).
    pub product: f64,
    /// Brute-force sum over all enumerated states.
    pub enumerated: f64,
    /// Bound on `|log Z_truncated - log Z_untruncated|`; zero for fermions.
    pub truncation_tail: f64,
}

fn check_point(spec: &FockEnsembleSpec, at: LagrangeCoords) -> Result<()> {
    if !(at.beta > 0.0 && at.beta.is_finite() && at.lambda2.is_finite()) {
        return Err(Error::domain("fock ensemble", format!("invalid point {at:?}")));
    }
    if spec.statistics == FockStatistics::BoseEinstein {
        for &e in &spec.energies {
            if -at.beta * e - at.lambda2 >= 0.0 {
                return Err(Error::domain(
                    "fock ensemble",
                    format!("bosonic level ε = {e} needs ξ e^(-βε) < 1"),
                ));
            }
        }
    }
    Ok(())
}

/// `log Z` by the product form and by explicit enumeration of all states.
pub fn fock_log_partition(spec: &FockEnsembleSpec, at: LagrangeCoords) -> Result<FockLogPartition> {
    check_point(spec, at)?;
    let mut z = CompensatedSum::default();
    spec.for_each_state(|a1, a2| z.add((-at.beta * a1 - at.lambda2 * a2).exp()));
    let truncation_tail = match spec.statistics {
        FockStatistics::FermiDirac => 0.0,
        FockStatistics::BoseEinstein => {
            let cap = spec.be_occupancy_cap as f64;
            spec.energies
                .iter()
                .map(|&e| {
                    let tail = ((cap + 1.0) * (-at.beta * e - at.lambda2)).exp();
                    tail / (1.0 - tail)
                })
                .sum()
        }
    };
    Ok(FockLogPartition {
        product: spec.log_partition_product(at),
        enumerated: z.value().ln(),
        truncation_tail,
    })
}

/// Exact moments of the enumerated distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FockMoments {
    /// `U = ⟨a₁⟩`
    pub energy: f64,
    /// `N = ⟨a₂⟩`
    pub particles: f64,
    /// Covariance of `(a₁, a₂)`.
    pub covariance: MetricTensor2,
    /// `-Σ ρ ln ρ` summed state by state.
    pub entropy: f64,
}

pub fn fock_moments(spec: &FockEnsembleSpec, at: LagrangeCoords) -> Result<FockMoments> {
    check_point(spec, at)?;
    let weight = |a1: f64, a2: f64| (-at.beta * a1 - at.lambda2 * a2).exp();

    let mut z = CompensatedSum::default();
    let mut s1 = CompensatedSum::default();
    let mut s2 = CompensatedSum::default();
    spec.for_each_state(|a1, a2| {
        let w = weight(a1, a2);
        z.add(w);
        s1.add(w * a1);
        s2.add(w * a2);
    });
    let z = z.value();
    let log_z = z.ln();
    let (u, n) = (s1.value() / z, s2.value() / z);

    let mut c11 = CompensatedSum::default();
    let mut c12 = CompensatedSum::default();
    let mut c22 = CompensatedSum::default();
    let mut ent = CompensatedSum::default();
    spec.for_each_state(|a1, a2| {
        let log_w = -at.beta * a1 - at.lambda2 * a2;
        let rho = (log_w - log_z).exp();
        let (d1, d2) = (a1 - u, a2 - n);
        c11.add(rho * d1 * d1);
        c12.add(rho * d1 * d2);
        c22.add(rho * d2 * d2);
        if rho > 0.0 {
            ent.add(-rho * (log_w - log_z));
        }
    });
    Ok(FockMoments {
        energy: u,
        particles: n,
        covariance: MetricTensor2::new(c11.value(), c12.value(), c22.value()),
        entropy: ent.value(),
    })
}

/// Free energy `F = -log Z` of an enumerated ensemble, from the product form.
impl FreeEnergyField for FockEnsembleSpec {
    fn free_energy(&self, at: LagrangeCoords) -> Result<f64> {
        Ok(-self.log_partition_product(at))
    }

    fn domain(&self) -> Domain {
        Domain::POSITIVE_BETA
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_fermion_level() {
        let spec = FockEnsembleSpec::fermi(vec![1.0]).unwrap();
        let at = LagrangeCoords::new(1.0, 0.0);
        let lz = fock_log_partition(&spec, at).unwrap();
        let e = (-1.0f64).exp();
        assert!((lz.product - e.ln_1p()).abs() < 1e-15);
        assert!((lz.enumerated - e.ln_1p()).abs() < 1e-15);
        assert!((lz.product - 0.313_262).abs() < 1e-6);

        let m = fock_moments(&spec, at).unwrap();
        let n = 1.0 / (1.0f64.exp() + 1.0);
        assert!((m.particles - n).abs() < 1e-15);
        assert!((m.particles - 0.268_941).abs() < 1e-6);
        assert!((m.covariance.g22 - n * (1.0 - n)).abs() < 1e-15);
        assert!((m.covariance.g22 - 0.196_612).abs() < 1e-6);
    }

    #[test]
    fn single_boson_level_against_closed_form() {
        let spec = FockEnsembleSpec::bose(vec![1.0], 200).unwrap();
        let at = LagrangeCoords::from_beta_xi(1.0, 0.5);
        let lz = fock_log_partition(&spec, at).unwrap();
        let exact = -(-0.5 * (-1.0f64).exp()).ln_1p();
        assert!((lz.enumerated - exact).abs() < 1e-12);
        assert!((lz.product - exact).abs() < 1e-12);
        assert!(lz.truncation_tail < 1e-13);
    }

    #[test]
    fn three_fermion_levels_enumerate_eight_states() {
        let spec = FockEnsembleSpec::fermi(vec![1.0, 2.0, 3.0]).unwrap();
        assert_eq!(spec.state_count(), 8.0);
        let at = LagrangeCoords::from_beta_xi(0.7, 0.3);
        let mut brute = 0.0;
        for mask in 0..8u32 {
            let (mut a1, mut a2) = (0.0, 0.0);
            for (i, e) in [1.0, 2.0, 3.0].iter().enumerate() {
                if mask & (1 << i) != 0 {
                    a1 += e;
                    a2 += 1.0;
                }
            }
            brute += (-0.7 * a1 - at.lambda2 * a2).exp();
        }
        let lz = fock_log_partition(&spec, at).unwrap();
        assert!((lz.enumerated - brute.ln()).abs() < 1e-15);
        assert!((lz.product - brute.ln()).abs() < 1e-15);
    }

    #[test]
    fn degenerate_levels_give_proportional_energy() {
        let spec = FockEnsembleSpec::bose(vec![0.8; 3], 20).unwrap();
        let m = fock_moments(&spec, LagrangeCoords::from_beta_xi(1.2, 0.6)).unwrap();
        assert!((m.energy - 0.8 * m.particles).abs() < 1e-13 * m.energy);
    }

    #[test]
    fn rejects_oversized_and_invalid_specs() {
        assert!(matches!(
            FockEnsembleSpec::bose(vec![1.0; 4], 200),
            Err(Error::EnumerationTooLarge { .. })
        ));
        assert!(FockEnsembleSpec::fermi(vec![-1.0]).is_err());
        assert!(FockEnsembleSpec::bose(vec![1.0], 0).is_err());
        let spec = FockEnsembleSpec::bose(vec![0.0], 10).unwrap();
        assert!(fock_log_partition(&spec, LagrangeCoords::from_beta_xi(1.0, 1.2)).is_err());
    }
}
