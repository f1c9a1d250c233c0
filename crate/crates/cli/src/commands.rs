use std::fmt;
use std::path::Path;

use landau_dipole::numeric::{
    channel_tolerance, convergence_study, halving_sequence, solve_channels, GridLayout, RadialGrid,
    DEFAULT_EXTENT,
};
use landau_dipole::spectra::{
    cyclotron_frequency, dual_config, energy, enumerate_degenerate_states,
};
use landau_dipole::wavefn::{length_scale_from_config, radial_eigenfunction, sample_radial};
use landau_dipole::{fields, DipoleFieldConfig, Model, QuantumNumbers, Sigma};

use crate::args::{Command, GlobalArgs, NumericArgs};
use crate::table::{Cell, Table};

/// Why a command did not succeed, mapped onto the process exit code.
#[derive(Debug)]
pub enum Failure {
    /// Exit 1: the computation ran but a check failed. Output is still
    /// emitted.
    Verification { output: Table, message: String },
    /// Exit 2: bad arguments, configuration or I/O.
    Usage(String),
}

impl Failure {
    fn usage(e: impl fmt::Display) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub struct Outcome {
    pub table: Table,
    /// Human-readable summary for standard error.
    pub summary: Option<String>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome {
            table,
            summary: None,
        }
    }
}

pub fn resolve_config(global: &GlobalArgs) -> Result<DipoleFieldConfig, Failure> {
    let base = match &global.config {
        Some(path) => read_config(path)?,
        None => DipoleFieldConfig::new(Model::Hmw, 1.0, 1.0, 1.0, Sigma::Plus)
            .expect("defaults are valid"),
    };
    base.overridden(
        global.model.map(Into::into),
        global.mass,
        global.dipole_moment,
        global.source_density,
        global.sigma,
    )
    .map_err(Failure::usage)
}

fn read_config(path: &Path) -> Result<DipoleFieldConfig, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("invalid config {}: {e}", path.display())))
}

pub fn run(command: &Command, config: &DipoleFieldConfig) -> Result<Outcome, Failure> {
    match command {
        Command::Spectrum {
            l_min,
            l_max,
            nu_max,
        } => spectrum(config, *l_min, *l_max, *nu_max).map(Into::into),
        Command::Wavefunction {
            nu,
            l,
            a,
            r_max,
            samples,
        } => wavefunction(config, *nu, *l, *a, *r_max, *samples).map(Into::into),
        Command::Degeneracy {
            level,
            l_window,
            show_dual,
        } => degeneracy(config, *level, l_window[0], l_window[1], *show_dual).map(Into::into),
        Command::Crosscheck(args) => crosscheck(config, args),
        Command::Validate => validate(config),
        Command::Converge { numeric, grids } => converge(config, numeric, *grids).map(Into::into),
    }
}

fn check_window(min: i64, max: i64) -> Result<(), Failure> {
    if min > max {
        return Err(Failure::Usage(format!("empty ℓ range: {min} > {max}")));
    }
    Ok(())
}

fn spectrum(
    config: &DipoleFieldConfig,
    l_min: i64,
    l_max: i64,
    nu_max: u32,
) -> Result<Table, Failure> {
    check_window(l_min, l_max)?;
    let omega = cyclotron_frequency(config);
    let sigma = config.sigma();
    let mut levels: Vec<_> = (l_min..=l_max)
        .flat_map(|ell| (0..=nu_max).map(move |nu| QuantumNumbers::new(nu, ell, sigma)))
        .map(|q| (q, energy(config.model(), q, omega)))
        .collect();
    levels.sort_by_key(|(q, e)| (e.half_units, q.ell, q.nu));

    let mut table = Table::new(&["nu", "ell", "sigma", "energy_over_omega", "energy"]);
    for (q, e) in levels {
        table.push(vec![
            i64::from(q.nu).into(),
            q.ell.into(),
            q.sigma.value().into(),
            e.in_omega().into(),
            e.value.into(),
        ]);
    }
    Ok(table)
}

fn wavefunction(
    config: &DipoleFieldConfig,
    nu: u32,
    ell: i64,
    a: Option<f64>,
    r_max: Option<f64>,
    samples: usize,
) -> Result<Table, Failure> {
    let a = a.unwrap_or_else(|| length_scale_from_config(config));
    let f = radial_eigenfunction(QuantumNumbers::new(nu, ell, config.sigma()), a)
        .map_err(Failure::usage)?;
    let points = sample_radial(&f, r_max.unwrap_or(10.0 * a), samples).map_err(Failure::usage)?;
    let mut table = Table::new(&["r", "R"]);
    for (r, value) in points {
        table.push(vec![r.into(), value.into()]);
    }
    Ok(table)
}

fn degeneracy(
    config: &DipoleFieldConfig,
    level: u64,
    l_min: i64,
    l_max: i64,
    show_dual: bool,
) -> Result<Table, Failure> {
    check_window(l_min, l_max)?;
    let states = enumerate_degenerate_states(config.model(), config.sigma(), level, l_min, l_max)
        .map_err(Failure::usage)?;
    let dual = dual_config(config);
    let mut columns = vec!["model", "nu", "ell", "sigma", "energy_over_omega"];
    if show_dual {
        columns.extend(["dual_model", "dual_sigma"]);
    }
    let mut table = Table::new(&columns);
    for q in states {
        let mut row: Vec<Cell> = vec![
            config.model().label().into(),
            i64::from(q.nu).into(),
            q.ell.into(),
            q.sigma.value().into(),
            (level as i64).into(),
        ];
        if show_dual {
            row.extend([dual.model().label().into(), dual.sigma().value().into()]);
        }
        table.push(row);
    }
    Ok(table)
}

fn base_grid(config: &DipoleFieldConfig, args: &NumericArgs) -> Result<RadialGrid, Failure> {
    if args.k == 0 {
        return Err(Failure::Usage("--k must be positive".into()));
    }
    let r_max = args
        .r_max
        .unwrap_or(DEFAULT_EXTENT * length_scale_from_config(config));
    RadialGrid::new(args.grid_n, r_max, GridLayout::from(args.stencil)).map_err(Failure::usage)
}

fn crosscheck(config: &DipoleFieldConfig, args: &NumericArgs) -> Result<Outcome, Failure> {
    let grid = base_grid(config, args)?;
    let channels: Vec<(i64, Sigma)> = args.l.iter().map(|&l| (l, config.sigma())).collect();
    let solutions = solve_channels(config, &channels, &grid, args.k).map_err(Failure::usage)?;

    let mut table = Table::new(&["ell", "sigma", "k", "numeric", "analytic", "relative_error"]);
    let mut worst: Option<(f64, i64, usize)> = None;
    let mut failed = false;
    for sol in &solutions {
        let tolerance = channel_tolerance(sol.ell);
        for (j, ((numeric, analytic), err)) in sol
            .eigenvalues
            .iter()
            .zip(sol.analytic())
            .zip(sol.relative_errors())
            .enumerate()
        {
            table.push(vec![
                sol.ell.into(),
                sol.sigma.value().into(),
                (j as i64 + 1).into(),
                (*numeric).into(),
                analytic.into(),
                err.into(),
            ]);
            failed |= err.is_nan() || err >= tolerance;
            if worst.is_none_or(|(w, _, _)| err > w) {
                worst = Some((err, sol.ell, j + 1));
            }
        }
    }
    let (err, ell, k) = worst.expect("at least one eigenvalue");
    let summary = format!(
        "max relative error {err:.3e} at ell={ell} k={k} on {} grid N={} r_max={}: {}",
        grid.layout().label(),
        grid.n_points(),
        grid.r_max(),
        if failed { "FAIL" } else { "PASS" }
    );
    if failed {
        return Err(Failure::Verification {
            output: table,
            message: summary,
        });
    }
    Ok(Outcome {
        table,
        summary: Some(summary),
    })
}

fn validate(config: &DipoleFieldConfig) -> Result<Outcome, Failure> {
    let report = fields::validate_landau_conditions(config);
    let mut table = Table::new(&["check", "status", "residual"]);
    for c in &report.checks {
        table.push(vec![
            c.name.into(),
            if c.passed { "PASS" } else { "FAIL" }.into(),
            c.residual.into(),
        ]);
    }
    if report.all_passed() {
        Ok(table.into())
    } else {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        Err(Failure::Verification {
            output: table,
            message: format!("failed: {}", failing.join(", ")),
        })
    }
}

fn converge(
    config: &DipoleFieldConfig,
    args: &NumericArgs,
    count: usize,
) -> Result<Table, Failure> {
    let grids = halving_sequence(base_grid(config, args)?, count);
    let mut table = Table::new(&["ell", "step", "n_points", "max_rel_error", "ratio", "order"]);
    for &ell in &args.l {
        let rows = convergence_study(config, ell, args.k, &grids).map_err(Failure::usage)?;
        for row in rows {
            table.push(vec![
                ell.into(),
                row.step.into(),
                (row.n_points as i64).into(),
                row.max_relative_error.into(),
                row.error_ratio.into(),
                row.order.into(),
            ]);
        }
    }
    Ok(table)
}
