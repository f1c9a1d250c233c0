//! The radial Hamiltonian of one angular channel, its finite-difference
//! discretization and its matrix elements in the analytic basis.

use crate::error::{Error, Result};
use crate::fields::{DipoleFieldConfig, Model};
use crate::numeric::grid::{GridLayout, RadialGrid};
use crate::numeric::quadrature::GaussLegendre;
use crate::numeric::tridiag::TridiagonalMatrix;
use crate::spectra::cyclotron_frequency;
use crate::wavefn::{
    length_scale_from_config, quadrature_cutoff, RadialEigenfunction, QUADRATURE_NODES,
};

/// Radial operator of channel `ℓ`:
///
/// ```text
/// H_ℓ R = -(1/2M)(R'' + R'/r - ℓ²R/r²) + [Mω²r²/8 + s(ℓ - 1)ω/2] R
/// ```
///
/// with `s = σ` for `Hmw` and `s = -σ` for `Lac`. The two models only differ
/// through `s`, so `Hmw(σ)` and `Lac(-σ)` build bit-identical operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelOperator {
    mass: f64,
    omega: f64,
    ell: i64,
    gauge_shift: f64,
}

impl ChannelOperator {
    pub fn new(config: &DipoleFieldConfig, ell: i64) -> Self {
        let omega = cyclotron_frequency(config);
        let s = match config.model() {
            Model::Hmw => config.sigma().value(),
            Model::Lac => -config.sigma().value(),
        } as f64;
        let l = ell as f64;
        Self {
            mass: config.mass(),
            omega,
            ell,
            gauge_shift: s * l * omega / 2.0 - s * omega / 2.0,
        }
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn ell(&self) -> i64 {
        self.ell
    }

    /// `Mω²r²/8` plus the constant `σℓω/2 - σω/2` shift (model-signed).
    pub fn potential(&self, r: f64) -> f64 {
        self.mass * self.omega * self.omega * r * r / 8.0 + self.gauge_shift
    }

    /// `(H_ℓ f)(r)` with derivatives from eighth-order central differences of
    /// step `h`.
    pub fn apply(&self, f: impl Fn(f64) -> f64, r: f64, h: f64) -> f64 {
        let (d1, d2) = central_derivatives(&f, r, h);
        let l2 = (self.ell * self.ell) as f64;
        let value = f(r);
        -(d2 + d1 / r - l2 * value / (r * r)) / (2.0 * self.mass) + self.potential(r) * value
    }
}

/// Eighth-order central first and second derivatives.
pub fn central_derivatives(f: impl Fn(f64) -> f64, x: f64, h: f64) -> (f64, f64) {
    const D1: [f64; 4] = [4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0];
    const D2: [f64; 4] = [8.0 / 5.0, -1.0 / 5.0, 8.0 / 315.0, -1.0 / 560.0];
    const D2_CENTER: f64 = -205.0 / 72.0;
    let mut first = 0.0;
    let mut second = D2_CENTER * f(x);
    for k in 0..4 {
        let dx = (k + 1) as f64 * h;
        let (plus, minus) = (f(x + dx), f(x - dx));
        first += D1[k] * (plus - minus);
        second += D2[k] * (plus + minus);
    }
    (first / h, second / (h * h))
}

/// Symmetric tridiagonal form of `H_ℓ` acting on `u = √r R`.
///
/// * [`GridLayout::Nodes`]: `-(1/2M) u'' + [(ℓ² - 1/4)/(2Mr²) + V(r)] u` with
///   the three-point stencil and `u = 0` at both ends.
/// * [`GridLayout::Cells`]: flux-conservative stencil for `(1/r)(r R')'`
///   with zero flux through the axis and `R = 0` on the outer face, then
///   scaled by `√r` on both sides.
pub fn discretize_radial(
    config: &DipoleFieldConfig,
    ell: i64,
    grid: &RadialGrid,
) -> Result<TridiagonalMatrix> {
    grid.check_covers(length_scale_from_config(config), 0, ell)?;
    let op = ChannelOperator::new(config, ell);
    let (n, h, m) = (grid.n_points(), grid.step(), config.mass());
    let kinetic = 1.0 / (m * h * h);
    let l2 = (ell * ell) as f64;

    let (diagonal, off_diagonal) = match grid.layout() {
        GridLayout::Nodes => {
            let diagonal = (0..n)
                .map(|i| {
                    let r = grid.radius(i);
                    kinetic + (l2 - 0.25) / (2.0 * m * r * r) + op.potential(r)
                })
                .collect();
            (diagonal, vec![-kinetic / 2.0; n - 1])
        }
        GridLayout::Cells => {
            // face i sits at (i + 1) h, between cells i and i + 1
            let face = |i: usize| (i + 1) as f64 * h;
            let diagonal = (0..n)
                .map(|i| {
                    let r = grid.radius(i);
                    let inner = if i > 0 { face(i - 1) } else { 0.0 };
                    let outer = if i + 1 == n { 2.0 * face(i) } else { face(i) };
                    (inner + outer) / (2.0 * m * h * h * r)
                        + l2 / (2.0 * m * r * r)
                        + op.potential(r)
                })
                .collect();
            let off_diagonal = (0..n - 1)
                .map(|i| {
                    -face(i) / (2.0 * m * h * h * (grid.radius(i) * grid.radius(i + 1)).sqrt())
                })
                .collect();
            (diagonal, off_diagonal)
        }
    };
    TridiagonalMatrix::new(diagonal, off_diagonal)
}

/// Finite-difference step for applying `H_ℓ` to analytic functions, relative
/// to the length scale.
pub const ANALYTIC_STEP: f64 = 0.02;

/// `⟨R_i | H_ℓ | R_j⟩ = ∫ R_i (H_ℓ R_j) r dr` by Gauss–Legendre quadrature.
pub fn hamiltonian_matrix_elements(
    config: &DipoleFieldConfig,
    ell: i64,
    basis: &[RadialEigenfunction],
) -> Result<Vec<Vec<f64>>> {
    if basis.is_empty() {
        return Err(Error::IncompatibleBasis("empty basis".into()));
    }
    let a = length_scale_from_config(config);
    for f in basis {
        let q = f.quantum_numbers();
        if q.ell != ell {
            return Err(Error::IncompatibleBasis(format!(
                "basis has ℓ = {} in channel ℓ = {ell}",
                q.ell
            )));
        }
        if ((f.length_scale() - a) / a).abs() > 1e-12 {
            return Err(Error::IncompatibleBasis(format!(
                "basis length scale {} differs from configured {a}",
                f.length_scale()
            )));
        }
    }
    let op = ChannelOperator::new(config, ell);
    let cut = basis
        .iter()
        .map(|f| quadrature_cutoff(f.quantum_numbers(), a))
        .fold(0.0, f64::max);
    let rule = GaussLegendre::new(QUADRATURE_NODES);
    let h = ANALYTIC_STEP * a;

    let nb = basis.len();
    let mut matrix = vec![vec![0.0; nb]; nb];
    for (r, w) in rule.mapped(0.0, cut) {
        let values: Vec<f64> = basis.iter().map(|f| f.eval(r)).collect();
        let actions: Vec<f64> = basis
            .iter()
            .map(|f| op.apply(|x| f.eval(x), r, h))
            .collect();
        for i in 0..nb {
            for j in 0..nb {
                matrix[i][j] += w * r * values[i] * actions[j];
            }
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Sigma;
    use crate::spectra::QuantumNumbers;
    use crate::wavefn::radial_eigenfunction;
    use approx::assert_relative_eq;

    fn cfg(model: Model, sigma: Sigma, omega: f64) -> DipoleFieldConfig {
        DipoleFieldConfig::new(model, 1.0, omega, 1.0, sigma).unwrap()
    }

    #[test]
    fn node_stencil_potential_entry_at_unit_radius() {
        // 99 nodes on (0, 10): r_9 = 1
        let grid = RadialGrid::new(99, 10.0, GridLayout::Nodes).unwrap();
        let m = discretize_radial(&cfg(Model::Hmw, Sigma::Plus, 1.0), 0, &grid).unwrap();
        assert_relative_eq!(grid.radius(9), 1.0, epsilon = 1e-14);
        let kinetic = 1.0 / (grid.step() * grid.step());
        // -1/8 + 1/8 + 0 - 1/2
        assert_relative_eq!(m.diagonal()[9] - kinetic, -0.5, epsilon = 1e-10);
    }

    #[test]
    fn node_stencil_small_frequency_assembly() {
        let c = DipoleFieldConfig::new(Model::Hmw, 1.0, 1e-8, 1.0, Sigma::Plus).unwrap();
        // a = 1e4, so a short grid fails the turning point check
        let short = RadialGrid::new(99, 10.0, GridLayout::Nodes).unwrap();
        assert!(matches!(
            discretize_radial(&c, 1, &short),
            Err(Error::GridTooShort { .. })
        ));

        let grid = RadialGrid::new(999, 3e4, GridLayout::Nodes).unwrap();
        let m = discretize_radial(&c, 1, &grid).unwrap();
        let (r, h) = (grid.radius(4), grid.step());
        let expected = 1.0 / (h * h) + 0.75 / (2.0 * r * r);
        assert_relative_eq!(m.diagonal()[4], expected, max_relative = 1e-9);
    }

    #[test]
    fn node_stencil_off_diagonal_is_uniform() {
        let grid = RadialGrid::new(200, 20.0, GridLayout::Nodes).unwrap();
        let m = discretize_radial(&cfg(Model::Lac, Sigma::Minus, 1.0), 2, &grid).unwrap();
        let expected = -1.0 / (2.0 * grid.step() * grid.step());
        assert!(m.off_diagonal().iter().all(|&e| e == expected));
    }

    #[test]
    fn cell_stencil_interior_kinetic_term() {
        let grid = RadialGrid::new(200, 20.0, GridLayout::Cells).unwrap();
        let c = cfg(Model::Hmw, Sigma::Plus, 1.0);
        let m = discretize_radial(&c, 0, &grid).unwrap();
        let op = ChannelOperator::new(&c, 0);
        let h = grid.step();
        for i in [0, 1, 50, 198] {
            assert_relative_eq!(
                m.diagonal()[i],
                1.0 / (h * h) + op.potential(grid.radius(i)),
                max_relative = 1e-13
            );
        }
        // first face coupling: r = h, between cells at h/2 and 3h/2
        let e0 = -1.0 / (2.0 * h * h * (0.75f64).sqrt());
        assert_relative_eq!(m.off_diagonal()[0], e0, max_relative = 1e-13);
    }

    #[test]
    fn duality_gives_identical_matrices() {
        for layout in [GridLayout::Cells, GridLayout::Nodes] {
            let grid = RadialGrid::new(500, 20.0, layout).unwrap();
            for ell in -3..=3 {
                for sigma in [Sigma::Plus, Sigma::Minus] {
                    let hmw = cfg(Model::Hmw, sigma, 1.3);
                    let lac = cfg(Model::Lac, sigma.flip(), 1.3);
                    assert_eq!(
                        discretize_radial(&hmw, ell, &grid).unwrap(),
                        discretize_radial(&lac, ell, &grid).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn central_derivatives_of_a_gaussian() {
        let f = |x: f64| (-x * x).exp();
        let (d1, d2) = central_derivatives(f, 0.7, 0.02);
        assert_relative_eq!(d1, -1.4 * f(0.7), max_relative = 1e-11);
        assert_relative_eq!(d2, (4.0 * 0.49 - 2.0) * f(0.7), max_relative = 1e-9);
    }

    fn basis(ell: i64, nus: &[u32], sigma: Sigma) -> Vec<RadialEigenfunction> {
        nus.iter()
            .map(|&nu| radial_eigenfunction(QuantumNumbers::new(nu, ell, sigma), 1.0).unwrap())
            .collect()
    }

    #[test]
    fn matrix_elements_are_diagonal_in_analytic_basis() {
        let c = cfg(Model::Hmw, Sigma::Plus, 1.0);
        let h = hamiltonian_matrix_elements(&c, 1, &basis(1, &[0, 1, 2], Sigma::Plus)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { (i + 1) as f64 } else { 0.0 };
                assert!(
                    (h[i][j] - expected).abs() < 1e-6,
                    "H[{i}][{j}] = {}",
                    h[i][j]
                );
                assert!((h[i][j] - h[j][i]).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn single_ground_state_element() {
        let c = cfg(Model::Hmw, Sigma::Plus, 1.0);
        let h = hamiltonian_matrix_elements(&c, 0, &basis(0, &[0], Sigma::Plus)).unwrap();
        assert!(h[0][0].abs() < 1e-6, "{}", h[0][0]);
    }

    #[test]
    fn matrix_elements_reject_mixed_bases() {
        let c = cfg(Model::Hmw, Sigma::Plus, 1.0);
        let mut b = basis(1, &[0, 1], Sigma::Plus);
        b.extend(basis(2, &[0], Sigma::Plus));
        assert!(matches!(
            hamiltonian_matrix_elements(&c, 1, &b),
            Err(Error::IncompatibleBasis(_))
        ));
        assert!(hamiltonian_matrix_elements(&c, 1, &[]).is_err());
        let wrong_scale =
            vec![radial_eigenfunction(QuantumNumbers::new(0, 1, Sigma::Plus), 2.0).unwrap()];
        assert!(hamiltonian_matrix_elements(&c, 1, &wrong_scale).is_err());
    }
}
