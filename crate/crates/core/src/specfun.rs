//! Special-function kernel: factorials, the terminating confluent
//! hypergeometric series and associated Laguerre polynomials.
//!
//! Only the polynomial regime `F[-ν, b, x]` with `ν ≥ 0` and integer `b ≥ 1`
//! is supported. That is the only case a normalizable radial solution needs.

use crate::error::{Error, Result};

/// Dense coefficients `c_k` of `Σ c_k x^k`, lowest order first.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialCoefficients {
    coeffs: Vec<f64>,
}

impl PolynomialCoefficients {
    /// Builds a polynomial, trimming trailing zero coefficients so the leading
    /// coefficient is nonzero whenever the degree is positive.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// Coefficients of `F[-ν, b, x] = Σ_k (-ν)_k / (b)_k · x^k / k!`.
///
/// Built with the term ratio `c_{k+1} / c_k = (k - ν) / ((b + k)(k + 1))`, so
/// every coefficient is a product of exact small-integer ratios.
pub fn kummer_coefficients(nu: i64, b: i64) -> Result<PolynomialCoefficients> {
    if nu < 0 {
        return Err(Error::NegativeDegree(nu));
    }
    if b < 1 {
        return Err(Error::PochhammerPole(b));
    }
    let mut coeffs = Vec::with_capacity(nu as usize + 1);
    let mut c = 1.0;
    coeffs.push(c);
    for k in 0..nu {
        c *= (k - nu) as f64 / ((b + k) as f64 * (k + 1) as f64);
        coeffs.push(c);
    }
    Ok(PolynomialCoefficients::new(coeffs))
}

/// Evaluates the terminating Kummer function `F[-ν, b, x]`.
pub fn kummer_polynomial(nu: i64, b: i64, x: f64) -> Result<f64> {
    Ok(kummer_coefficients(nu, b)?.eval(x))
}

/// Associated Laguerre polynomial `L_ν^m(x)` by upward recurrence in `ν`.
pub fn laguerre_assoc(nu: i64, m: i64, x: f64) -> Result<f64> {
    if nu < 0 {
        return Err(Error::NegativeDegree(nu));
    }
    if m < 0 {
        return Err(Error::NegativeArgument(m));
    }
    let m = m as f64;
    let mut prev = 1.0;
    if nu == 0 {
        return Ok(prev);
    }
    let mut cur = 1.0 + m - x;
    for k in 1..nu {
        let k = k as f64;
        let next = ((2.0 * k + 1.0 + m - x) * cur - (k + m) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `ln(n!)`. Exact product up to `20!` (fits in `u64`), Stirling series beyond.
pub fn log_factorial(n: i64) -> Result<f64> {
    if n < 0 {
        return Err(Error::NegativeArgument(n));
    }
    if n <= 20 {
        let product: u64 = (1..=n as u64).product();
        return Ok((product as f64).ln());
    }
    Ok(ln_gamma_large(n as f64 + 1.0))
}

/// Stirling series for `ln Γ(z)`; accurate to rounding for `z > 20`.
fn ln_gamma_large(z: f64) -> f64 {
    const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 / 1188.0))));
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + series
}
