//! Normalized radial eigenfunctions
//!
//! ```text
//! R_{ν,ℓ}(r) = a^{-(1+|ℓ|)} [ (|ℓ|+ν)! / (2^{|ℓ|} ν! |ℓ|!²) ]^{1/2}
//!              · exp(-r²/4a²) · r^{|ℓ|} · F[-ν, |ℓ|+1, r²/2a²]
//! ```
//!
//! normalized with the planar radial measure `∫ R² r dr = 1`. The same closed
//! form serves both models; only the energy attached to `(ν, ℓ, σ)` differs.

use crate::error::{Error, Result};
use crate::fields::DipoleFieldConfig;
use crate::numeric::quadrature::GaussLegendre;
use crate::specfun::{kummer_coefficients, log_factorial, PolynomialCoefficients};
use crate::spectra::{cyclotron_frequency, QuantumNumbers};

/// Gauss–Legendre nodes used for normalization and overlap integrals.
pub const QUADRATURE_NODES: usize = 400;

#[derive(Debug, Clone, PartialEq)]
pub struct RadialEigenfunction {
    q: QuantumNumbers,
    length_scale: f64,
    log_norm: f64,
    kummer: PolynomialCoefficients,
}

pub fn radial_eigenfunction(q: QuantumNumbers, length_scale: f64) -> Result<RadialEigenfunction> {
    if !(length_scale.is_finite() && length_scale > 0.0) {
        return Err(Error::InvalidLengthScale(length_scale));
    }
    let m = q.ell.abs();
    let nu = i64::from(q.nu);
    let log_bracket = log_factorial(m + nu)?
        - m as f64 * std::f64::consts::LN_2
        - log_factorial(nu)?
        - 2.0 * log_factorial(m)?;
    let log_norm = 0.5 * log_bracket - (1 + m) as f64 * length_scale.ln();
    Ok(RadialEigenfunction {
        q,
        length_scale,
        log_norm,
        kummer: kummer_coefficients(nu, m + 1)?,
    })
}

impl RadialEigenfunction {
    pub fn quantum_numbers(&self) -> QuantumNumbers {
        self.q
    }

    pub fn length_scale(&self) -> f64 {
        self.length_scale
    }

    /// `R(r)`. Defined for `r ≥ 0`; negative `r` yields the analytic
    /// continuation (parity `(-1)^{|ℓ|}`), which finite-difference stencils
    /// near the origin rely on.
    pub fn eval(&self, r: f64) -> f64 {
        let a = self.length_scale;
        let r2 = r * r;
        let m = self.q.ell.unsigned_abs() as i32;
        (self.log_norm - r2 / (4.0 * a * a)).exp()
            * r.powi(m)
            * self.kummer.eval(r2 / (2.0 * a * a))
    }

    /// Radius beyond which the function is negligible for quadrature.
    pub fn quadrature_cutoff(&self) -> f64 {
        quadrature_cutoff(self.q, self.length_scale)
    }
}

/// `a (2√(2ν + |ℓ|) + 10)`
pub fn quadrature_cutoff(q: QuantumNumbers, length_scale: f64) -> f64 {
    length_scale * (2.0 * (2.0 * f64::from(q.nu) + q.ell.abs() as f64).sqrt() + 10.0)
}

/// `∫₀^∞ f g r dr` by Gauss–Legendre on `[0, max cutoff]`.
pub fn overlap(f: &RadialEigenfunction, g: &RadialEigenfunction) -> f64 {
    let cut = f.quadrature_cutoff().max(g.quadrature_cutoff());
    GaussLegendre::new(QUADRATURE_NODES).integrate(0.0, cut, |r| f.eval(r) * g.eval(r) * r)
}

/// `n_samples` uniform points on `[0, r_max]`, both ends included.
pub fn sample_radial(
    f: &RadialEigenfunction,
    r_max: f64,
    n_samples: usize,
) -> Result<Vec<(f64, f64)>> {
    if !(r_max.is_finite() && r_max > 0.0) {
        return Err(Error::InvalidRange(format!(
            "r_max must be positive, got {r_max}"
        )));
    }
    if n_samples < 2 {
        return Err(Error::InvalidRange(format!(
            "need at least 2 samples, got {n_samples}"
        )));
    }
    let last = n_samples - 1;
    Ok((0..n_samples)
        .map(|i| {
            let r = if i == last {
                r_max
            } else {
                r_max * i as f64 / last as f64
            };
            (r, f.eval(r))
        })
        .collect())
}

/// Magnetic length `a = (M ω)^{-1/2}`.
pub fn length_scale_from_config(config: &DipoleFieldConfig) -> f64 {
    (config.mass() * cyclotron_frequency(config)).sqrt().recip()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{Model, Sigma};
    use crate::spectra::dual_config;
    use approx::assert_relative_eq;

    fn rf(nu: u32, ell: i64, a: f64) -> RadialEigenfunction {
        radial_eigenfunction(QuantumNumbers::new(nu, ell, Sigma::Plus), a).unwrap()
    }

    #[test]
    fn ground_state_at_origin() {
        assert_eq!(rf(0, 0, 1.0).eval(0.0), 1.0);
    }

    #[test]
    fn first_radial_excitation_vanishes_at_sqrt_two() {
        let f = rf(1, 0, 1.0);
        assert!(f.eval(2f64.sqrt()).abs() < 1e-15);
        assert!(f.eval(1.3) > 0.0 && f.eval(1.5) < 0.0);
    }

    #[test]
    fn normalization_example() {
        assert_relative_eq!(overlap(&rf(2, 3, 1.0), &rf(2, 3, 1.0)), 1.0, epsilon = 1e-8);
    }

    #[test]
    fn rejects_bad_length_scale() {
        let q = QuantumNumbers::new(0, 0, Sigma::Plus);
        assert_eq!(
            radial_eigenfunction(q, 0.0),
            Err(Error::InvalidLengthScale(0.0))
        );
        assert!(radial_eigenfunction(q, -1.0).is_err());
        assert!(radial_eigenfunction(q, f64::NAN).is_err());
    }

    #[test]
    fn sampling_examples() {
        let s = sample_radial(&rf(0, 0, 1.0), 1.0, 2).unwrap();
        assert_eq!(s[0], (0.0, 1.0));
        assert_eq!(s[1].0, 1.0);
        assert_relative_eq!(s[1].1, (-0.25f64).exp(), max_relative = 1e-15);

        assert_eq!(sample_radial(&rf(0, 2, 1.0), 3.0, 5).unwrap()[0].1, 0.0);

        let s = sample_radial(&rf(3, -1, 0.7), 6.0, 101).unwrap();
        assert_eq!(s.len(), 101);
        assert!(s.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(s[100].0, 6.0);

        assert!(sample_radial(&rf(0, 0, 1.0), 1.0, 1).is_err());
        assert!(sample_radial(&rf(0, 0, 1.0), 0.0, 5).is_err());
    }

    #[test]
    fn length_scale_examples() {
        let c = DipoleFieldConfig::new(Model::Hmw, 1.0, 1.0, 1.0, Sigma::Plus).unwrap();
        assert_eq!(length_scale_from_config(&c), 1.0);
        // M = 4, ω = |d ρ| / M = 1
        let c = DipoleFieldConfig::new(Model::Lac, 4.0, 2.0, -2.0, Sigma::Minus).unwrap();
        assert_eq!(length_scale_from_config(&c), 0.5);
        assert_eq!(length_scale_from_config(&dual_config(&c)), 0.5);
    }

    #[test]
    fn large_indices_stay_finite() {
        let f = rf(12, 20, 1.0);
        assert!(f.eval(5.0).is_finite());
        assert_relative_eq!(overlap(&f, &f), 1.0, epsilon = 1e-8);
    }
}
