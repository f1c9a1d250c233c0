//! Landau-level analogs for neutral particles carrying a permanent dipole
//! moment.
//!
//! A magnetic dipole in a radial electric field (`Model::Lac`) and an
//! electric dipole in a radial magnetic field (`Model::Hmw`) both see an
//! effective symmetric-gauge vector potential with a uniform effective field,
//! and therefore a Landau spectrum. This crate provides:
//!
//! * [`fields`]: configurations, effective potentials and the quantization
//!   conditions,
//! * [`spectra`]: exact energies, ladder form, degeneracy and duality,
//! * [`wavefn`]: normalized radial eigenfunctions,
//! * [`numeric`]: a finite-difference eigensolver used to cross-check all of
//!   the above,
//! * [`specfun`]: the special functions underneath.
//!
//! Natural units `ħ = c = 1` throughout.

pub mod error;
pub mod fields;
pub mod numeric;
pub mod specfun;
pub mod spectra;
pub mod wavefn;

pub use error::{Error, Result};
pub use fields::{DipoleFieldConfig, Model, Sigma};
pub use spectra::{EnergyLevel, QuantumNumbers};
