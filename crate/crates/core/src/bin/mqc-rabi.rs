use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mqc_rabi::experiments::{self, Command, ExperimentConfig, Overrides, SolverKind};
use mqc_rabi::{Error, InitialTls};

/// Mixed quantum-classical Rabi dynamics and its Duffing reduction.
#[derive(Parser)]
#[command(name = "mqc-rabi", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// JSON config file; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Output directory.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,

    /// Base seed for Wigner sampling [default: 1].
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Integration step in 1/g [default: largest step <= 2π/(200 Ω_γ) dividing 0.01].
    #[arg(long, global = true)]
    dt: Option<f64>,

    /// Wigner trajectories for `compare` [default: 100000, enough for 1% population noise].
    #[arg(long, global = true)]
    trajectories: Option<u64>,

    /// Also write a matplotlib script next to the tables.
    #[arg(long, global = true)]
    emit_plot_script: bool,

    /// Worker threads for ensembles [default: all cores].
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Args, Default)]
struct Model {
    /// TLS transition energy Ω_e in units of g [default: Ω_γ].
    #[arg(long)]
    omega_e: Option<f64>,

    /// Optical frequency Ω_γ in units of g [default: 50, deep in the weak-coupling regime].
    #[arg(long)]
    omega_gamma: Option<f64>,

    /// Length of traces used for spectra, in 1/g [default: 200, about 60 Rabi periods].
    #[arg(long)]
    duration: Option<f64>,

    /// Length of written traces, in 1/g [default: 25].
    #[arg(long)]
    t_final: Option<f64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dominant Rabi frequency against focused occupancy n0.
    Scan {
        #[command(flatten)]
        model: Model,
        /// Comma-separated n0 values [default: 0 to 3 in steps of 0.05].
        #[arg(long, value_delimiter = ',')]
        n0_list: Option<Vec<f64>>,
        /// Trace solver: duffing or mqc [default: duffing, the reduced equation].
        #[arg(long, value_parser = parse_solver)]
        solver: Option<SolverKind>,
    },
    /// Quantum, Duffing and MQC populations at resonance.
    Compare {
        #[command(flatten)]
        model: Model,
        /// Focused occupancy [default: 0.59, which reproduces the quantum Rabi frequency].
        #[arg(long)]
        n0: Option<f64>,
    },
    /// Focused MQC against quantum populations for detuned TLS.
    Offresonant {
        #[command(flatten)]
        model: Model,
        /// Comma-separated Ω_e/Ω_γ values [default: 21 values from 0.9 to 1.1].
        #[arg(long, value_delimiter = ',')]
        ratios: Option<Vec<f64>>,
        /// Focused occupancy [default: 0.59].
        #[arg(long)]
        n0: Option<f64>,
    },
    /// Dynamics from the TLS ground state with one photon.
    Ground {
        #[command(flatten)]
        model: Model,
        /// Focused occupancy [default: 1.59, one quantum above the excited-start value].
        #[arg(long)]
        n0: Option<f64>,
    },
}

fn parse_solver(s: &str) -> Result<SolverKind, String> {
    match s {
        "duffing" => Ok(SolverKind::Duffing),
        "mqc" => Ok(SolverKind::Mqc),
        _ => Err(format!("unknown solver `{s}` (expected duffing or mqc)")),
    }
}

impl Model {
    fn apply(self, o: &mut Overrides) {
        o.omega_e = self.omega_e;
        o.omega_gamma = self.omega_gamma;
        o.duration = self.duration;
        o.t_final = self.t_final;
    }
}

fn build(cli: Cli) -> Result<ExperimentConfig, Error> {
    let g = cli.global;
    let file = match &g.config {
        Some(path) => Overrides::from_file(path)?,
        None => Overrides::default(),
    };
    let mut flags = Overrides {
        seed: g.seed,
        dt: g.dt,
        trajectories: g.trajectories,
        workers: g.workers,
        ..Default::default()
    };
    let command = match cli.command {
        Cmd::Scan { model, n0_list, solver } => {
            model.apply(&mut flags);
            flags.n0_grid = n0_list;
            flags.solver = solver;
            Command::Scan
        }
        Cmd::Compare { model, n0 } => {
            model.apply(&mut flags);
            flags.n0 = n0;
            Command::Compare
        }
        Cmd::Offresonant { model, ratios, n0 } => {
            model.apply(&mut flags);
            flags.omega_e_ratios = ratios;
            flags.n0 = n0;
            Command::Offresonant
        }
        Cmd::Ground { model, n0 } => {
            model.apply(&mut flags);
            flags.n0 = n0;
            flags.initial_tls = Some(InitialTls::Ground);
            Command::Ground
        }
    };
    Ok(ExperimentConfig {
        command,
        overrides: file.merged(flags),
        out_dir: g.out,
        emit_plot_script: g.emit_plot_script,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match build(cli).and_then(|c| experiments::run(&c)) {
        Ok(files) => {
            for f in files {
                println!("{}", f.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
