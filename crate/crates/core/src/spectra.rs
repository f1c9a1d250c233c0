//! Exact Landau-analog spectra.
//!
//! Energies are kept as integer multiples of `ω/2` so identities between the
//! two models, the ladder-operator form and the duality map compare exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{DipoleFieldConfig, Model, Sigma};

/// Radial degree `ν ≥ 0`, angular index `ℓ` and revolution sign `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub nu: u32,
    pub ell: i64,
    pub sigma: Sigma,
}

impl QuantumNumbers {
    pub fn new(nu: u32, ell: i64, sigma: Sigma) -> Self {
        Self { nu, ell, sigma }
    }

    /// `2β` once the hypergeometric series is truncated at degree `ν`
    /// (`γ = β - (|ℓ|+1)/2 = ν`).
    fn twice_beta(&self) -> i64 {
        2 * i64::from(self.nu) + self.ell.abs() + 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLevel {
    /// Energy in units of `ω/2`. Always even and nonnegative.
    pub half_units: i64,
    pub omega: f64,
    pub value: f64,
}

impl EnergyLevel {
    fn from_half_units(half_units: i64, omega: f64) -> Self {
        assert!(
            omega > 0.0,
            "cyclotron frequency must be positive, got {omega}"
        );
        debug_assert!(half_units >= 0 && half_units % 2 == 0, "{half_units}");
        Self {
            half_units,
            omega,
            value: half_units as f64 * omega / 2.0,
        }
    }

    /// Energy as an integer multiple of `ω`.
    pub fn in_omega(&self) -> i64 {
        self.half_units / 2
    }
}

/// `|dipole_moment · source_density| / mass`.
pub fn cyclotron_frequency(config: &DipoleFieldConfig) -> f64 {
    (config.dipole_moment() * config.source_density()).abs() / config.mass()
}

/// `(ν + |ℓ|/2 - σℓ/2 + σ/2 + 1/2) ω`
pub fn energy_lac(q: QuantumNumbers, omega: f64) -> EnergyLevel {
    let s = q.sigma.value();
    EnergyLevel::from_half_units(q.twice_beta() - s * (q.ell - 1), omega)
}

/// `(ν + |ℓ|/2 + σℓ/2 - σ/2 + 1/2) ω`
pub fn energy_hmw(q: QuantumNumbers, omega: f64) -> EnergyLevel {
    let s = q.sigma.value();
    EnergyLevel::from_half_units(q.twice_beta() + s * (q.ell - 1), omega)
}

pub fn energy(model: Model, q: QuantumNumbers, omega: f64) -> EnergyLevel {
    match model {
        Model::Lac => energy_lac(q, omega),
        Model::Hmw => energy_hmw(q, omega),
    }
}

/// `[n + (1 - σ)/2] ω`
pub fn ladder_energy(n: u64, sigma: Sigma, omega: f64) -> EnergyLevel {
    EnergyLevel::from_half_units(2 * n as i64 + 1 - sigma.value(), omega)
}

/// Ladder occupation `n = ν + (|ℓ| + σℓ)/2`.
pub fn ladder_index(q: QuantumNumbers) -> u64 {
    let shift = (q.ell.abs() + q.sigma.value() * q.ell) / 2;
    u64::from(q.nu) + shift as u64
}

/// Maps an electric-dipole setup onto its magnetic-dipole dual and back.
/// Moment and density magnitudes carry over; the revolution sign flips.
pub fn dual_config(config: &DipoleFieldConfig) -> DipoleFieldConfig {
    DipoleFieldConfig::new(
        config.model().dual(),
        config.mass(),
        config.dipole_moment(),
        config.source_density(),
        config.sigma().flip(),
    )
    .expect("dual of a valid configuration is valid")
}

/// All `(ν, ℓ)` with `ℓ ∈ [ell_min, ell_max]` whose energy is
/// `level · ω`, sorted by `ℓ` then `ν`.
///
/// At most one `ν` exists per `ℓ` since the energy is strictly increasing in
/// `ν`.
pub fn enumerate_degenerate_states(
    model: Model,
    sigma: Sigma,
    level: u64,
    ell_min: i64,
    ell_max: i64,
) -> Result<Vec<QuantumNumbers>> {
    if ell_min > ell_max {
        return Err(Error::InvalidRange(format!(
            "ell_min {ell_min} > ell_max {ell_max}"
        )));
    }
    let states = (ell_min..=ell_max)
        .filter_map(|ell| {
            let floor = energy(model, QuantumNumbers::new(0, ell, sigma), 1.0).in_omega();
            let nu = level as i64 - floor;
            (nu >= 0).then(|| QuantumNumbers::new(nu as u32, ell, sigma))
        })
        .collect();
    Ok(states)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sigma::{Minus, Plus};

    fn q(nu: u32, ell: i64, sigma: Sigma) -> QuantumNumbers {
        QuantumNumbers::new(nu, ell, sigma)
    }

    #[test]
    fn cyclotron_examples() {
        let c = DipoleFieldConfig::new(Model::Lac, 6.0, 2.0, 3.0, Plus).unwrap();
        assert_eq!(cyclotron_frequency(&c), 1.0);
        let c = DipoleFieldConfig::new(Model::Hmw, 2.0, 1.0, -4.0, Plus).unwrap();
        assert_eq!(cyclotron_frequency(&c), 2.0);
        assert!(DipoleFieldConfig::new(Model::Lac, 1.0, 0.0, 1.0, Plus).is_err());
    }

    #[test]
    fn lac_examples() {
        assert_eq!(energy_lac(q(0, 0, Plus), 1.0).value, 1.0);
        assert_eq!(energy_lac(q(0, 0, Minus), 1.0).value, 0.0);
        assert_eq!(energy_lac(q(2, -1, Plus), 1.0).value, 4.0);
    }

    #[test]
    fn hmw_examples() {
        assert_eq!(energy_hmw(q(0, 0, Plus), 1.0).value, 0.0);
        assert_eq!(energy_hmw(q(1, 3, Minus), 1.0).value, 2.0);
        assert_eq!(energy_hmw(q(0, -2, Plus), 1.0).value, 0.0);
        let e = energy_hmw(q(3, 2, Plus), 0.5);
        assert_eq!(e.half_units, 10);
        assert_eq!(e.in_omega(), 5);
        assert_eq!(e.value, 2.5);
    }

    #[test]
    fn ladder_examples() {
        assert_eq!(ladder_energy(0, Plus, 1.0).value, 0.0);
        assert_eq!(ladder_energy(0, Minus, 2.5).value, 2.5);
        assert_eq!(ladder_energy(3, Plus, 1.0).value, 3.0);
        assert_eq!(ladder_index(q(1, -3, Plus)), 1);
        assert_eq!(ladder_index(q(0, 2, Plus)), 2);
        assert_eq!(ladder_index(q(0, 0, Minus)), 0);
    }

    #[test]
    fn dual_examples() {
        let c = DipoleFieldConfig::new(Model::Hmw, 1.0, 1.0, 2.0, Plus).unwrap();
        let d = dual_config(&c);
        assert_eq!(
            d,
            DipoleFieldConfig::new(Model::Lac, 1.0, 1.0, 2.0, Minus).unwrap()
        );
        assert_eq!(dual_config(&d), c);
        assert_eq!(cyclotron_frequency(&d), cyclotron_frequency(&c));
    }

    #[test]
    fn degenerate_state_examples() {
        let states = enumerate_degenerate_states(Model::Hmw, Plus, 0, -3, 3).unwrap();
        assert_eq!(
            states,
            vec![
                q(0, -3, Plus),
                q(0, -2, Plus),
                q(0, -1, Plus),
                q(0, 0, Plus)
            ]
        );

        let states = enumerate_degenerate_states(Model::Hmw, Plus, 1, -2, 1).unwrap();
        assert_eq!(
            states,
            vec![q(1, -2, Plus), q(1, -1, Plus), q(1, 0, Plus), q(0, 1, Plus)]
        );

        // LAC(σ=-1) is the dual of HMW(σ=+1): the zero level is degenerate
        // on ℓ ≤ 0 only, so the window [0, 5] holds a single state
        let states = enumerate_degenerate_states(Model::Lac, Minus, 0, 0, 5).unwrap();
        assert_eq!(states, vec![q(0, 0, Minus)]);
        let states = enumerate_degenerate_states(Model::Lac, Minus, 0, -5, 0).unwrap();
        assert_eq!(states, (-5..=0).map(|l| q(0, l, Minus)).collect::<Vec<_>>());
        let states = enumerate_degenerate_states(Model::Lac, Plus, 1, 0, 5).unwrap();
        assert_eq!(states, (0..=5).map(|l| q(0, l, Plus)).collect::<Vec<_>>());

        assert!(enumerate_degenerate_states(Model::Hmw, Plus, 0, 1, 3)
            .unwrap()
            .is_empty());
        assert!(enumerate_degenerate_states(Model::Hmw, Plus, 0, 3, 1).is_err());
    }

    #[test]
    fn enumeration_matches_exhaustive_search() {
        for model in [Model::Lac, Model::Hmw] {
            for sigma in [Plus, Minus] {
                for level in 0..6u64 {
                    let mut brute = Vec::new();
                    for ell in -7..=7 {
                        for nu in 0..20 {
                            if energy(model, q(nu, ell, sigma), 1.0).in_omega() == level as i64 {
                                brute.push(q(nu, ell, sigma));
                            }
                        }
                    }
                    let fast = enumerate_degenerate_states(model, sigma, level, -7, 7).unwrap();
                    assert_eq!(fast, brute, "{model} {sigma} level {level}");
                }
            }
        }
    }

    #[test]
    fn degenerate_count_grows_linearly_on_degenerate_side() {
        let counts: Vec<usize> = [5, 10, 15]
            .iter()
            .map(|&w| {
                enumerate_degenerate_states(Model::Hmw, Plus, 2, -w, 0)
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, vec![6, 11, 16]);
    }
}
