//! Finite-difference cross-check of the analytic spectra.
//!
//! Each angular channel `ℓ` reduces to a symmetric tridiagonal eigenproblem
//! for `u = √r R`. The lowest eigenvalues come from Sturm bisection and the
//! eigenvectors, when requested, from inverse iteration. Channels are
//! independent and may be solved concurrently.

pub mod grid;
pub mod operator;
pub mod quadrature;
pub mod tridiag;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{DipoleFieldConfig, Model, Sigma};
use crate::spectra::{cyclotron_frequency, energy, QuantumNumbers};
use crate::wavefn::length_scale_from_config;

pub use grid::{GridLayout, RadialGrid};
pub use operator::{
    central_derivatives, discretize_radial, hamiltonian_matrix_elements, ChannelOperator,
};
pub use quadrature::GaussLegendre;
pub use tridiag::{inverse_iteration, tridiagonal_eigenvalues, TridiagonalMatrix};

/// Default mesh: 4000 unknowns out to 20 magnetic lengths.
pub const DEFAULT_POINTS: usize = 4000;
pub const DEFAULT_EXTENT: f64 = 20.0;

/// Relative tolerance against the analytic spectrum for channel `ℓ`.
/// `ℓ = 0` sits at the critical `-1/(4r²)` coupling of the `√r` substitution
/// and gets a looser bound.
pub fn channel_tolerance(ell: i64) -> f64 {
    if ell == 0 {
        1e-3
    } else {
        1e-4
    }
}

/// `|numeric - analytic| / max(|analytic|, ω)`. Several exact levels are
/// zero, so the level spacing `ω` floors the denominator.
pub fn relative_error(numeric: f64, analytic: f64, omega: f64) -> f64 {
    (numeric - analytic).abs() / analytic.abs().max(omega)
}

/// Eigenvector sampled on the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridEigenvector {
    /// `u_i = √r_i R(r_i)`, normalized so that `Σ u_i² h = 1`.
    pub u: Vec<f64>,
    /// `R(r_i) = u_i / √r_i`.
    pub radial: Vec<f64>,
}

impl GridEigenvector {
    /// Interior sign changes, ignoring the numerically flat tail.
    pub fn sign_changes(&self) -> usize {
        let peak = self.u.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let mut last = 0.0f64;
        let mut changes = 0;
        for &v in self.u.iter().filter(|v| v.abs() > 1e-8 * peak) {
            if last != 0.0 && v.signum() != last.signum() {
                changes += 1;
            }
            last = v;
        }
        changes
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenSolution {
    pub model: Model,
    pub ell: i64,
    pub sigma: Sigma,
    pub omega: f64,
    pub mass: f64,
    pub grid: RadialGrid,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Option<Vec<GridEigenvector>>,
}

impl EigenSolution {
    /// Exact energies `E(ν = j, ℓ, σ)` matching each computed eigenvalue.
    pub fn analytic(&self) -> Vec<f64> {
        (0..self.eigenvalues.len())
            .map(|j| {
                energy(
                    self.model,
                    QuantumNumbers::new(j as u32, self.ell, self.sigma),
                    self.omega,
                )
                .value
            })
            .collect()
    }

    pub fn relative_errors(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .zip(self.analytic())
            .map(|(&n, a)| relative_error(n, a, self.omega))
            .collect()
    }

    pub fn max_relative_error(&self) -> f64 {
        self.relative_errors().into_iter().fold(0.0, f64::max)
    }
}

/// The `k` lowest levels of channel `ℓ` on `grid`, optionally with
/// eigenvectors.
pub fn numeric_spectrum(
    config: &DipoleFieldConfig,
    ell: i64,
    grid: &RadialGrid,
    k: usize,
    with_vectors: bool,
) -> Result<EigenSolution> {
    if k == 0 {
        return Err(Error::TooManyEigenvalues {
            requested: 0,
            size: grid.n_points(),
        });
    }
    grid.check_covers(length_scale_from_config(config), k as u32 - 1, ell)?;
    let matrix = discretize_radial(config, ell, grid)?;
    let eigenvalues = tridiagonal_eigenvalues(&matrix, k)?;

    let eigenvectors = with_vectors.then(|| {
        let scale = grid.step().sqrt().recip();
        eigenvalues
            .iter()
            .map(|&lambda| {
                let u: Vec<f64> = inverse_iteration(&matrix, lambda)
                    .into_iter()
                    .map(|v| v * scale)
                    .collect();
                let radial = u
                    .iter()
                    .enumerate()
                    .map(|(i, v)| v / grid.radius(i).sqrt())
                    .collect();
                GridEigenvector { u, radial }
            })
            .collect()
    });

    Ok(EigenSolution {
        model: config.model(),
        ell,
        sigma: config.sigma(),
        omega: cyclotron_frequency(config),
        mass: config.mass(),
        grid: *grid,
        eigenvalues,
        eigenvectors,
    })
}

/// Solves several `(ℓ, σ)` channels concurrently; results keep input order.
pub fn solve_channels(
    config: &DipoleFieldConfig,
    channels: &[(i64, Sigma)],
    grid: &RadialGrid,
    k: usize,
) -> Result<Vec<EigenSolution>> {
    channels
        .par_iter()
        .map(|&(ell, sigma)| numeric_spectrum(&config.with_sigma(sigma), ell, grid, k, false))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub step: f64,
    pub n_points: usize,
    pub max_relative_error: f64,
    /// Error on the previous grid over error on this one.
    pub error_ratio: Option<f64>,
    /// `ln(ratio) / ln(step ratio)`.
    pub order: Option<f64>,
}

/// Max relative eigenvalue error per grid and the empirical order between
/// successive grids.
pub fn convergence_study(
    config: &DipoleFieldConfig,
    ell: i64,
    k: usize,
    grids: &[RadialGrid],
) -> Result<Vec<ConvergenceRow>> {
    if grids.len() < 3 {
        return Err(Error::TooFewGrids(grids.len()));
    }
    for (i, pair) in grids.windows(2).enumerate() {
        if pair[0].step() == pair[1].step() {
            return Err(Error::DegenerateGrids(i, i + 1));
        }
    }
    let errors: Vec<f64> = grids
        .par_iter()
        .map(|g| numeric_spectrum(config, ell, g, k, false).map(|s| s.max_relative_error()))
        .collect::<Result<_>>()?;

    Ok(grids
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let (error_ratio, order) = if i == 0 {
                (None, None)
            } else {
                let ratio = errors[i - 1] / errors[i];
                (
                    Some(ratio),
                    Some(ratio.ln() / (grids[i - 1].step() / g.step()).ln()),
                )
            };
            ConvergenceRow {
                step: g.step(),
                n_points: g.n_points(),
                max_relative_error: errors[i],
                error_ratio,
                order,
            }
        })
        .collect())
}

/// `count` grids starting at `base`, each halving the previous step.
pub fn halving_sequence(base: RadialGrid, count: usize) -> Vec<RadialGrid> {
    std::iter::successors(Some(base), |g| Some(g.refined()))
        .take(count)
        .collect()
}
