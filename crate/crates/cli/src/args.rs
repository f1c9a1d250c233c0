use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use landau_dipole::numeric::GridLayout;
use landau_dipole::{Model, Sigma};

use crate::table::Format;

#[derive(Debug, Parser)]
#[command(
    name = "landau-dipole",
    version,
    about = "Landau levels of neutral dipoles in crossed fields"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output table format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// JSON configuration file; flags below override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// [default: hmw]
    #[arg(long, global = true, value_enum)]
    pub model: Option<ModelArg>,
    /// Revolution sign, +1 or -1. [default: +1]
    #[arg(long, global = true, allow_negative_numbers = true, value_parser = parse_sigma)]
    pub sigma: Option<Sigma>,
    /// [default: 1]
    #[arg(long, global = true)]
    pub mass: Option<f64>,
    /// Dipole moment magnitude. [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub dipole_moment: Option<f64>,
    /// Charge or magnetic-charge density of the source. [default: 1]
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub source_density: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModelArg {
    Lac,
    Hmw,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Lac => Model::Lac,
            ModelArg::Hmw => Model::Hmw,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StencilArg {
    /// Cell-centred finite volume.
    Fv,
    /// Node-based three-point stencil on u = √r R.
    SqrtR,
}

impl From<StencilArg> for GridLayout {
    fn from(s: StencilArg) -> Self {
        match s {
            StencilArg::Fv => GridLayout::Cells,
            StencilArg::SqrtR => GridLayout::Nodes,
        }
    }
}

fn parse_sigma(s: &str) -> Result<Sigma, String> {
    let v: i64 = s
        .parse()
        .map_err(|_| format!("expected +1 or -1, got '{s}'"))?;
    Sigma::try_from(v).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate analytic energies over a (ν, ℓ) range.
    Spectrum {
        #[arg(long, default_value_t = -3, allow_negative_numbers = true)]
        l_min: i64,
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        l_max: i64,
        #[arg(long, default_value_t = 2)]
        nu_max: u32,
    },
    /// Sample a normalized radial eigenfunction.
    Wavefunction {
        #[arg(long, default_value_t = 0)]
        nu: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        l: i64,
        /// Magnetic length. [default: from the configuration]
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        /// Last sampled radius. [default: 10 a]
        #[arg(long, allow_negative_numbers = true)]
        r_max: Option<f64>,
        #[arg(long, default_value_t = 201)]
        samples: usize,
    },
    /// List the states sharing one energy level within an ℓ window.
    Degeneracy {
        /// Energy in units of ω.
        #[arg(long, default_value_t = 0)]
        level: u64,
        #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_negative_numbers = true,
              default_values_t = [-5, 5])]
        l_window: Vec<i64>,
        /// Append the dual model and revolution sign to each row.
        #[arg(long)]
        show_dual: bool,
    },
    /// Compare finite-difference eigenvalues with the analytic spectrum.
    Crosscheck(NumericArgs),
    /// Check the field conditions that make the spectrum Landau-like.
    Validate,
    /// Measure eigenvalue error under repeated grid halving.
    Converge {
        #[command(flatten)]
        numeric: NumericArgs,
        /// Number of grids, each halving the previous step.
        #[arg(long, default_value_t = 4)]
        grids: usize,
    },
}

#[derive(Debug, Args)]
pub struct NumericArgs {
    /// Angular channel; repeat for several.
    #[arg(long = "l", default_values_t = [2], allow_negative_numbers = true)]
    pub l: Vec<i64>,
    /// Number of lowest eigenvalues per channel.
    #[arg(long, default_value_t = 5)]
    pub k: usize,
    /// Grid points (the coarsest grid for `converge`).
    #[arg(long, default_value_t = 4000)]
    pub grid_n: usize,
    /// Outer radius in the same units as `--a`. [default: 20 a]
    #[arg(long, allow_negative_numbers = true)]
    pub r_max: Option<f64>,
    #[arg(long, value_enum, default_value_t = StencilArg::Fv)]
    pub stencil: StencilArg,
}
