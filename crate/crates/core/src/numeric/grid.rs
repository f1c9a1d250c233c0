use serde::Serialize;

use crate::error::{Error, Result};

/// Where the unknowns sit on the uniform radial mesh.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridLayout {
    /// Cell centres `r_i = (i - 1/2) h`, `i = 1..N`; outer Dirichlet face at
    /// `r_max = N h`. Discretized with the flux-conservative stencil.
    Cells,
    /// Nodes `r_i = i h`, `i = 1..N`, with `u(0) = u(r_max) = 0` and
    /// `r_max = (N + 1) h`. Discretized with the plain three-point stencil
    /// on `u = √r R`.
    Nodes,
}

impl GridLayout {
    pub fn label(self) -> &'static str {
        match self {
            GridLayout::Cells => "fv",
            GridLayout::Nodes => "sqrt-r",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialGrid {
    step: f64,
    n_points: usize,
    layout: GridLayout,
}

pub const MIN_POINTS: usize = 10;

impl RadialGrid {
    /// Uniform mesh with `n_points` unknowns covering `[0, r_max]`.
    pub fn new(n_points: usize, r_max: f64, layout: GridLayout) -> Result<Self> {
        if n_points < MIN_POINTS {
            return Err(Error::InvalidGrid(format!(
                "need at least {MIN_POINTS} points, got {n_points}"
            )));
        }
        if !(r_max.is_finite() && r_max > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "r_max must be positive, got {r_max}"
            )));
        }
        let intervals = match layout {
            GridLayout::Cells => n_points as f64,
            GridLayout::Nodes => n_points as f64 + 1.0,
        };
        Ok(Self {
            step: r_max / intervals,
            n_points,
            layout,
        })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn layout(&self) -> GridLayout {
        self.layout
    }

    pub fn r_max(&self) -> f64 {
        match self.layout {
            GridLayout::Cells => self.n_points as f64 * self.step,
            GridLayout::Nodes => (self.n_points as f64 + 1.0) * self.step,
        }
    }

    /// Radius of unknown `i` (zero-based).
    pub fn radius(&self, i: usize) -> f64 {
        match self.layout {
            GridLayout::Cells => (i as f64 + 0.5) * self.step,
            GridLayout::Nodes => (i as f64 + 1.0) * self.step,
        }
    }

    pub fn radii(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.radius(i)).collect()
    }

    /// Same extent, half the step.
    pub fn refined(&self) -> Self {
        let n_points = match self.layout {
            GridLayout::Cells => 2 * self.n_points,
            GridLayout::Nodes => 2 * self.n_points + 1,
        };
        Self {
            step: self.step / 2.0,
            n_points,
            layout: self.layout,
        }
    }

    /// Classical turning-point estimate `a √(4ν + 2|ℓ| + 2)` for the highest
    /// requested radial degree.
    pub fn turning_point(length_scale: f64, nu_max: u32, ell: i64) -> f64 {
        length_scale * (4.0 * f64::from(nu_max) + 2.0 * ell.abs() as f64 + 2.0).sqrt()
    }

    /// Fails unless the mesh extends past the turning point of level `nu_max`.
    pub fn check_covers(&self, length_scale: f64, nu_max: u32, ell: i64) -> Result<()> {
        let required = Self::turning_point(length_scale, nu_max, ell);
        if self.r_max() <= required {
            return Err(Error::GridTooShort {
                r_max: self.r_max(),
                required,
            });
        }
        Ok(())
    }
}
