use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};
use horizon_core::dynamics::{evolve, write_trajectory_csv, EvolutionConfig};
use horizon_cli::config::{defaults_help, parse_config, ConfigError, Scenario, SweepSpec};
use horizon_cli::presets::{self, preset};
use horizon_cli::svg::render_svg;
use horizon_cli::sweep::{curve_param, curves, dynamics_setup, run_sweep, write_csv, RunOptions};

const EXIT_CONFIG: u8 = 2;
const EXIT_NUMERIC: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "horizon", version, about = "Quantum resources of two-qubit states near a Schwarzschild horizon")]
struct Cli {
    /// Seed for random initial states and oracle restarts.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Replace the closed-form discord with a numerical minimisation using N restarts.
    #[arg(long, global = true, value_name = "N")]
    oracle_discord: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the sweep described by a configuration file.
    Run {
        config: PathBuf,
        /// Directory for relative output paths.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Run a built-in figure sweep.
    Preset {
        #[arg(value_parser = presets::NAMES)]
        name: String,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Write the full trajectory of a single dynamics curve.
    Dynamics {
        config: PathBuf,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Config(String),
    Numeric(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Config(_) => EXIT_CONFIG,
            Failure::Numeric(_) => EXIT_NUMERIC,
            Failure::Io(_) => EXIT_IO,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Config(m) | Failure::Numeric(m) | Failure::Io(m) => m,
        }
    }
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> Failure + '_ {
    move |e| Failure::Io(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<SweepSpec, Failure> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    parse_config(&text).map_err(|e: ConfigError| Failure::Config(format!("{}: {e}", path.display())))
}

fn resolve(out: &Option<PathBuf>, p: &Path) -> PathBuf {
    match out {
        Some(dir) => dir.join(p),
        None => p.to_path_buf(),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    if let Some(parent) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(io_err(parent))?;
    }
    File::create(path).map(BufWriter::new).map_err(io_err(path))
}

fn sweep(spec: &SweepSpec, opts: &RunOptions, out: &Option<PathBuf>) -> Result<(), Failure> {
    let rows = run_sweep(spec, opts).map_err(|e| Failure::Numeric(e.to_string()))?;
    let csv = resolve(out, &spec.output.csv);
    let mut w = create(&csv)?;
    write_csv(&rows, spec, &mut w).map_err(io_err(&csv))?;
    w.flush().map_err(io_err(&csv))?;
    if let Some(svg) = &spec.output.svg {
        let svg = resolve(out, svg);
        let doc = render_svg(&rows, spec).map_err(|e| Failure::Numeric(e.to_string()))?;
        fs::write(&svg, doc).map_err(io_err(&svg))?;
    }
    Ok(())
}

fn trajectory(spec: &SweepSpec, opts: &RunOptions, out: &Option<PathBuf>) -> Result<(), Failure> {
    if spec.scenario != Scenario::Dynamics {
        return Err(Failure::Config("the dynamics command needs scenario = dynamics".into()));
    }
    let cs = curves(spec);
    let [curve] = cs.as_slice() else {
        return Err(Failure::Config(format!(
            "the dynamics command needs a single curve, the [series] section gives {}",
            cs.len()
        )));
    };
    let numeric = |e: horizon_core::Error| Failure::Numeric(e.to_string());
    let (k, dt, rho0) = dynamics_setup(spec, curve, opts.seed).map_err(numeric)?;
    let cfg = EvolutionConfig {
        dt,
        max_time: spec.axis.stop,
        convergence_tol: curve_param(spec, curve, "tol"),
    };
    let (evolution, stalled) = match evolve(&rho0, &k, curve_param(spec, curve, "epsilon"), &cfg) {
        Ok(ev) => (ev, None),
        Err(horizon_core::Error::NotConverged {
            time,
            residual,
            evolution,
        }) => (
            *evolution,
            Some(format!("not converged by t = {time} (residual {residual:.3e})")),
        ),
        Err(e) => return Err(numeric(e)),
    };
    let csv = resolve(out, &spec.output.csv);
    let mut w = create(&csv)?;
    write_trajectory_csv(&evolution.trajectory, &mut w).map_err(io_err(&csv))?;
    w.flush().map_err(io_err(&csv))?;
    if let Some(svg) = &spec.output.svg {
        let rows = run_sweep(spec, opts).map_err(|e| Failure::Numeric(e.to_string()))?;
        let svg = resolve(out, svg);
        let doc = render_svg(&rows, spec).map_err(|e| Failure::Numeric(e.to_string()))?;
        fs::write(&svg, doc).map_err(io_err(&svg))?;
    }
    match stalled {
        Some(msg) => Err(Failure::Numeric(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().after_help(defaults_help()).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    }
    let opts = RunOptions {
        seed: cli.seed,
        oracle_restarts: cli.oracle_discord,
    };
    let result = match &cli.command {
        Command::Run { config, out } => load(config).and_then(|s| sweep(&s, &opts, out)),
        Command::Preset { name, out } => {
            let spec = preset(name).expect("name checked by the argument parser");
            sweep(&spec, &opts, out)
        }
        Command::Dynamics { config, out } => load(config).and_then(|s| trajectory(&s, &opts, out)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
