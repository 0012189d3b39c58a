//! qfi: verify, refute and explore uncertainty-gap inequalities for
//! quantum Fisher information metrics from the command line.
//!
//! Exit codes: 0 when the requested check holds (or the command is
//! report-only), 2 when an inequality is violated, 1 on input or
//! configuration errors.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use qfi_core::io::{load_density, load_observable, to_json_string, MatrixFile};
use qfi_core::{lab, metrics, tol, MonotoneFunctionSpec, TrialSource};
use render::ScanRow;

#[derive(Parser)]
#[command(
    name = "qfi",
    version,
    about = "Uncertainty-gap verification and counterexample search for quantum Fisher information metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Optional JSON file with default floor/tolerance/dims/trials/seed;
    /// explicit flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check one (state, A, B, metric) instance and report the gap.
    Verify {
        /// Density matrix file.
        #[arg(long)]
        state: PathBuf,
        /// First observable file.
        #[arg(long)]
        obs_a: PathBuf,
        /// Second observable file.
        #[arg(long)]
        obs_b: PathBuf,
        /// Metric spec: wyd:<beta>, bkm, hgamma:<gamma>, rld, wy, sld, bures.
        #[arg(long)]
        metric: String,
        /// Absolute tolerance on the gap.
        #[arg(long)]
        tolerance: Option<f64>,
        /// Eigenvalue floor applied when loading the state.
        #[arg(long)]
        floor: Option<f64>,
    },
    /// Tabulate the counterexample-family gap over a grid of t.
    Scan {
        /// Skew-information exponent, in [-1, 1) and nonzero.
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        /// Number of grid points (>= 2).
        #[arg(long)]
        steps: usize,
        /// Log-spaced grid instead of linear.
        #[arg(long)]
        log: bool,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Search the counterexample family for a violating parameter.
    Counterexample {
        /// Exponent in [-1, 0).
        #[arg(long, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 1e-7)]
        t_min: f64,
        #[arg(long, default_value_t = 0.49)]
        t_max: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
    },
    /// Sample random instances and report the minimum gap (report-only).
    Explore {
        #[arg(long)]
        metric: String,
        #[arg(long)]
        trials: Option<usize>,
        /// Comma-separated list of dimensions to cycle through.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        floor: Option<f64>,
        #[arg(long)]
        tolerance: Option<f64>,
        /// Write the argmin instance to <PREFIX>.rho.json, .obs_a.json, .obs_b.json.
        #[arg(long)]
        dump_argmin: Option<PathBuf>,
    },
    /// Compare G(metric-a) against G(metric-b) on sampled instances.
    ProbeG {
        #[arg(long)]
        metric_a: String,
        #[arg(long)]
        metric_b: String,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate the metric report (g_aa, g_bb, g_ab, area, f(0), G) of one instance.
    Metric {
        #[arg(long)]
        metric: String,
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        obs_a: PathBuf,
        #[arg(long)]
        obs_b: PathBuf,
        #[arg(long)]
        floor: Option<f64>,
    },
}

/// Optional config-file defaults; flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    floor: Option<f64>,
    tolerance: Option<f64>,
    dims: Option<Vec<usize>>,
    trials: Option<usize>,
    seed: Option<u64>,
}

struct Defaults {
    floor: f64,
    tolerance: f64,
    dims: Vec<usize>,
    trials: usize,
    seed: u64,
}

impl Defaults {
    fn resolve(config: Option<&Path>) -> Result<Self, String> {
        let file = match config {
            None => FileConfig::default(),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
                serde_json::from_str(&text)
                    .map_err(|e| format!("malformed config {}: {e}", path.display()))?
            }
        };
        Ok(Self {
            floor: file.floor.unwrap_or(tol::DEFAULT_EIGEN_FLOOR),
            tolerance: file.tolerance.unwrap_or(tol::DEFAULT_GAP),
            dims: file.dims.unwrap_or_else(|| vec![2, 3, 4]),
            trials: file.trials.unwrap_or(1000),
            seed: file.seed.unwrap_or(1),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let defaults = Defaults::resolve(cli.config.as_deref())?;
    let format = cli.format;

    let (document, exit) = match cli.command {
        Command::Verify {
            state,
            obs_a,
            obs_b,
            metric,
            tolerance,
            floor,
        } => {
            let spec = parse_spec(&metric)?;
            let rho = load_density(&state, floor.unwrap_or(defaults.floor)).map_err(stringify)?;
            let a = load_observable(&obs_a).map_err(stringify)?;
            let b = load_observable(&obs_b).map_err(stringify)?;
            let report = lab::check(&rho, &a, &b, spec, tolerance.unwrap_or(defaults.tolerance))
                .map_err(stringify)?;
            let exit = if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            };
            let doc = match format {
                Format::Text => render::verify_text(&report),
                Format::Json => to_json_string(&report),
                Format::Csv => render::verify_csv(&report),
            };
            (doc, exit)
        }

        Command::Scan {
            beta,
            t_min,
            t_max,
            steps,
            log,
            tolerance,
        } => {
            let tolerance = tolerance.unwrap_or(defaults.tolerance);
            let rows = scan_rows(beta, t_min, t_max, steps, log, tolerance)?;
            let doc = match format {
                Format::Text => render::scan_text(&rows),
                Format::Json => to_json_string(&rows),
                Format::Csv => render::scan_csv(&rows),
            };
            (doc, ExitCode::SUCCESS)
        }

        Command::Counterexample {
            beta,
            t_min,
            t_max,
            steps,
        } => {
            let record = lab::find_violation(beta, t_min, t_max, steps).map_err(stringify)?;
            let doc = match format {
                Format::Text => render::counterexample_text(&record),
                Format::Json => to_json_string(&record),
                Format::Csv => render::counterexample_csv(&record),
            };
            (doc, ExitCode::SUCCESS)
        }

        Command::Explore {
            metric,
            trials,
            dims,
            seed,
            floor,
            tolerance,
            dump_argmin,
        } => {
            let spec = parse_spec(&metric)?;
            let source = TrialSource::Random {
                dims: dims.unwrap_or_else(|| defaults.dims.clone()),
            };
            let summary = lab::explore(
                spec,
                &source,
                trials.unwrap_or(defaults.trials),
                seed.unwrap_or(defaults.seed),
                floor.unwrap_or(defaults.floor),
                tolerance.unwrap_or(defaults.tolerance),
            )
            .map_err(stringify)?;
            if let Some(prefix) = dump_argmin {
                dump_instance(&prefix, &summary.argmin)?;
            }
            let doc = match format {
                Format::Text => render::explore_text(&summary),
                Format::Json => to_json_string(&summary),
                Format::Csv => render::explore_csv(&summary),
            };
            (doc, ExitCode::SUCCESS)
        }

        Command::ProbeG {
            metric_a,
            metric_b,
            trials,
            dims,
            seed,
        } => {
            let spec_a = parse_spec(&metric_a)?;
            let spec_b = parse_spec(&metric_b)?;
            let report = lab::g_monotonicity_probe(
                spec_a,
                spec_b,
                &dims.unwrap_or_else(|| defaults.dims.clone()),
                trials.unwrap_or(defaults.trials),
                seed.unwrap_or(defaults.seed),
            )
            .map_err(stringify)?;
            let exit = if report.asserted_nonnegative == Some(false) {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
            let doc = match format {
                Format::Text => render::probe_text(&report),
                Format::Json => to_json_string(&report),
                Format::Csv => render::probe_csv(&report),
            };
            (doc, exit)
        }

        Command::Metric {
            metric,
            state,
            obs_a,
            obs_b,
            floor,
        } => {
            let spec = parse_spec(&metric)?;
            let rho = load_density(&state, floor.unwrap_or(defaults.floor)).map_err(stringify)?;
            let a = load_observable(&obs_a).map_err(stringify)?;
            let b = load_observable(&obs_b).map_err(stringify)?;
            let report = metrics::upf_bound(spec, &rho, &a, &b).map_err(stringify)?;
            let doc = match format {
                Format::Text => render::metric_text(&report),
                Format::Json => to_json_string(&report),
                Format::Csv => render::metric_csv(&report),
            };
            (doc, ExitCode::SUCCESS)
        }
    };

    emit(cli.out.as_deref(), &document)?;
    Ok(exit)
}

fn parse_spec(text: &str) -> Result<MonotoneFunctionSpec, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn stringify(e: qfi_core::Error) -> String {
    e.to_string()
}

fn scan_rows(
    beta: f64,
    t_min: f64,
    t_max: f64,
    steps: usize,
    log: bool,
    tolerance: f64,
) -> Result<Vec<ScanRow>, String> {
    if steps < 2 {
        return Err(format!("scan needs at least 2 steps, got {steps}"));
    }
    if !(t_min > 0.0 && t_min < t_max && t_max < 0.5) {
        return Err(format!(
            "scan range must satisfy 0 < t_min < t_max < 1/2, got [{t_min}, {t_max}]"
        ));
    }
    let beta_param = qfi_core::BetaParameter::new(beta).map_err(stringify)?;
    let mut rows = Vec::with_capacity(steps);
    for k in 0..steps {
        let frac = k as f64 / (steps - 1) as f64;
        let t = if k == steps - 1 {
            t_max
        } else if log {
            (t_min.ln() + frac * (t_max.ln() - t_min.ln())).exp()
        } else {
            t_min + frac * (t_max - t_min)
        };
        let closed_form_gap = lab::ce_closed_form_gap(t, beta).map_err(stringify)?;
        let (rho, a, b) = lab::ce_family(t).map_err(stringify)?;
        let (xi, eta) = lab::xi_eta(&rho, &a, &b, beta_param).map_err(stringify)?;
        rows.push(ScanRow {
            t,
            beta,
            closed_form_gap,
            matrix_gap: xi - eta,
            holds: closed_form_gap >= -tolerance,
        });
    }
    Ok(rows)
}

fn dump_instance(prefix: &Path, argmin: &qfi_core::lab::ArgminInstance) -> Result<(), String> {
    let save = |suffix: &str, file: &MatrixFile| -> Result<(), String> {
        let mut path = prefix.as_os_str().to_owned();
        path.push(suffix);
        file.save(PathBuf::from(path)).map_err(|e| e.to_string())
    };
    save(".rho.json", &argmin.rho)?;
    save(".obs_a.json", &argmin.obs_a)?;
    save(".obs_b.json", &argmin.obs_b)
}

fn emit(out: Option<&Path>, document: &str) -> Result<(), String> {
    match out {
        None => {
            println!("{document}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, format!("{document}\n"))
                .map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
    }
}
