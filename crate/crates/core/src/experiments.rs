//! Figure-level experiments: configuration, runs and file output.
//!
//! Each experiment writes CSV tables, one JSON sidecar per table carrying the
//! resolved configuration, and optionally a matplotlib script that plots the
//! tables.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::duffing::{solve_duffing, DuffingParams};
use crate::ensemble::run_ensemble_with_workers;
use crate::error::{Error, Result};
use crate::io::{ensure_writable, write_csv, write_json, write_series_csv, write_sidecar, SCHEMA_VERSION};
use crate::model::{
    EnsembleSpec, InitialTls, ModelParams, Sampler, DEFAULT_OMEGA, FOCUSED_N0, GROUND_START_N0,
};
use crate::mqc::{focused_initial, MqcIntegrator};
use crate::quantum::{propagate_quantum, rabi_frequency};
use crate::series::{channel, max_abs_diff, TimeSeries};
use crate::spectral::{rabi_spectrum, remove_optical_ripple, scan, ScanSolver, Spectrum, SpectrumOptions};

pub const DEFAULT_TRAJECTORIES: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 1;
pub const COMPARE_T_FINAL: f64 = 25.0;
/// Upper frequency written to spectrum tables.
pub const SPECTRUM_OMEGA_MAX: f64 = 12.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Scan,
    Compare,
    Offresonant,
    Ground,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Scan => "scan",
            Command::Compare => "compare",
            Command::Offresonant => "offresonant",
            Command::Ground => "ground",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerKind {
    Focused,
    Wigner,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Duffing,
    Mqc,
}

/// Optional settings from a config file or command-line flags. Unknown keys
/// are rejected.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub omega_e: Option<f64>,
    pub omega_gamma: Option<f64>,
    pub g: Option<f64>,
    pub sampler: Option<SamplerKind>,
    pub n0: Option<f64>,
    pub trajectories: Option<u64>,
    pub seed: Option<u64>,
    pub dt: Option<f64>,
    pub t_final: Option<f64>,
    pub initial_tls: Option<InitialTls>,
    /// Occupancies for `scan`.
    pub n0_grid: Option<Vec<f64>>,
    /// `Ω_e/Ω_γ` values for `offresonant`.
    pub omega_e_ratios: Option<Vec<f64>>,
    /// Length of traces fed to the spectral analysis.
    pub duration: Option<f64>,
    /// Solver used by `scan`.
    pub solver: Option<SolverKind>,
    pub workers: Option<usize>,
}

impl Overrides {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Fields set in `other` replace those in `self`.
    pub fn merged(mut self, other: Overrides) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(omega_e, omega_gamma, g, sampler, n0, trajectories, seed, dt, t_final, initial_tls, n0_grid, omega_e_ratios, duration, solver, workers);
        self
    }
}

/// One experiment invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub command: Command,
    pub overrides: Overrides,
    pub out_dir: PathBuf,
    pub emit_plot_script: bool,
}

/// Fully resolved settings, recorded in every sidecar.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Resolved {
    pub command: Command,
    pub params: ModelParams,
    pub sampler: SamplerKind,
    pub n0: f64,
    pub trajectories: u64,
    pub seed: u64,
    pub dt: f64,
    pub t_final: f64,
    pub initial_tls: InitialTls,
    pub duration: f64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub n0_grid: Vec<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub omega_e_ratios: Vec<f64>,
    pub solver: SolverKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub workers: Option<usize>,
}

/// `0, 0.05, …, 3`.
pub fn default_n0_grid() -> Vec<f64> {
    (0..=60).map(|i| i as f64 / 20.0).collect()
}

/// 21 values of `Ω_e/Ω_γ` from 0.9 to 1.1.
pub fn default_omega_e_ratios() -> Vec<f64> {
    (0..=20).map(|i| (90 + i) as f64 / 100.0).collect()
}

impl ExperimentConfig {
    pub fn resolve(&self) -> Result<Resolved> {
        let o = &self.overrides;
        let omega_gamma = o.omega_gamma.unwrap_or(DEFAULT_OMEGA);
        let params = ModelParams::new(o.omega_e.unwrap_or(omega_gamma), omega_gamma, o.g.unwrap_or(1.0))
            .map_err(|e| Error::Config(e.to_string()))?;
        let ground = self.command == Command::Ground;
        let r = Resolved {
            command: self.command,
            params,
            sampler: o.sampler.unwrap_or(SamplerKind::Wigner),
            n0: o.n0.unwrap_or(if ground { GROUND_START_N0 } else { FOCUSED_N0 }),
            trajectories: o.trajectories.unwrap_or(DEFAULT_TRAJECTORIES),
            seed: o.seed.unwrap_or(DEFAULT_SEED),
            dt: o.dt.unwrap_or_else(|| params.default_dt()),
            t_final: o.t_final.unwrap_or(COMPARE_T_FINAL),
            initial_tls: o.initial_tls.unwrap_or(if ground { InitialTls::Ground } else { InitialTls::Excited }),
            duration: o.duration.unwrap_or(SpectrumOptions::default().duration),
            n0_grid: match self.command {
                Command::Scan => o.n0_grid.clone().unwrap_or_else(default_n0_grid),
                _ => Vec::new(),
            },
            omega_e_ratios: match self.command {
                Command::Offresonant => o.omega_e_ratios.clone().unwrap_or_else(default_omega_e_ratios),
                _ => Vec::new(),
            },
            solver: o.solver.unwrap_or(SolverKind::Duffing),
            workers: o.workers,
        };
        r.validate()?;
        Ok(r)
    }
}

impl Resolved {
    fn validate(&self) -> Result<()> {
        let cfg = |m: String| Err(Error::Config(m));
        if !(self.n0 >= 0.0 && self.n0.is_finite()) {
            return cfg(format!("n0 must be non-negative, got {}", self.n0));
        }
        if self.trajectories == 0 {
            return cfg("trajectories must be at least 1".into());
        }
        if !(self.t_final > 0.0) || !(self.duration > 0.0) {
            return cfg("t_final and duration must be positive".into());
        }
        crate::model::check_step(self.dt, self.t_final, &self.params).map_err(|e| Error::Config(e.to_string()))?;
        if self.n0_grid.iter().any(|n| !(*n >= 0.0)) || self.n0_grid.windows(2).any(|w| w[1] < w[0]) {
            return cfg("n0_grid must be non-negative and ascending".into());
        }
        if self.omega_e_ratios.iter().any(|r| !(*r > 0.0)) {
            return cfg("omega_e_ratios must be positive".into());
        }
        Ok(())
    }

    fn spectrum_options(&self) -> SpectrumOptions {
        SpectrumOptions { duration: self.duration, ..SpectrumOptions::default() }
    }

    fn integrator(&self, params: ModelParams) -> MqcIntegrator {
        MqcIntegrator::new(params, self.dt)
    }
}

/// Runs the configured experiment and returns the files written.
pub fn run(config: &ExperimentConfig) -> Result<Vec<PathBuf>> {
    let resolved = config.resolve()?;
    ensure_writable(&config.out_dir)?;
    let mut out = Output::new(&config.out_dir, &resolved);
    match resolved.command {
        Command::Scan => cmd_scan(&resolved, &mut out)?,
        Command::Compare => cmd_compare(&resolved, &mut out)?,
        Command::Offresonant => cmd_offresonant(&resolved, &mut out)?,
        Command::Ground => cmd_ground(&resolved, &mut out)?,
    }
    if config.emit_plot_script {
        out.plot_script()?;
    }
    Ok(out.files)
}

/// Collects written files and attaches sidecars.
pub struct Output<'a> {
    dir: &'a Path,
    resolved: &'a Resolved,
    pub files: Vec<PathBuf>,
}

impl<'a> Output<'a> {
    pub fn new(dir: &'a Path, resolved: &'a Resolved) -> Self {
        Output { dir, resolved, files: Vec::new() }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.join(name)
    }

    fn finish(&mut self, path: PathBuf) -> Result<()> {
        let sidecar = write_sidecar(&path, self.resolved.command.name(), self.resolved)?;
        self.files.push(path);
        self.files.push(sidecar);
        Ok(())
    }

    fn series(&mut self, name: &str, series: &TimeSeries, channels: &[&str]) -> Result<()> {
        let path = self.path(name);
        write_series_csv(&path, series, channels)?;
        self.finish(path)
    }

    fn table(&mut self, name: &str, header: &[&str], rows: &[Vec<f64>]) -> Result<()> {
        let path = self.path(name);
        write_csv(&path, header, rows.iter().map(Vec::as_slice))?;
        self.finish(path)
    }

    fn spectrum(&mut self, name: &str, spectrum: &Spectrum) -> Result<()> {
        let rows = spectrum_rows(spectrum, None);
        self.table(name, &["omega_over_g", "magnitude"], &rows)
    }

    fn summary<T: Serialize>(&mut self, name: &str, value: &T) -> Result<()> {
        let path = self.path(name);
        write_json(&path, value)?;
        self.files.push(path);
        Ok(())
    }

    fn plot_script(&mut self) -> Result<()> {
        let name = format!("plot_{}.py", self.resolved.command.name());
        let path = self.path(&name);
        fs::write(&path, plot_script(self.resolved.command)).map_err(|e| Error::io(&path, e))?;
        self.files.push(path);
        Ok(())
    }
}

fn spectrum_rows(spectrum: &Spectrum, lead: Option<f64>) -> Vec<Vec<f64>> {
    spectrum
        .frequencies()
        .zip(&spectrum.magnitudes)
        .take_while(|(w, _)| *w <= SPECTRUM_OMEGA_MAX)
        .map(|(w, m)| lead.into_iter().chain([w, *m]).collect())
        .collect()
}

fn peak_or_nan(spectrum: &Spectrum) -> f64 {
    spectrum.dominant_peak.map_or(f64::NAN, |p| p.frequency)
}

/// Dominant-frequency scan over `n0_grid`.
pub fn cmd_scan(r: &Resolved, out: &mut Output) -> Result<()> {
    let solver = match r.solver {
        SolverKind::Duffing => ScanSolver::Duffing,
        SolverKind::Mqc => ScanSolver::MqcFocused,
    };
    let points = scan(&r.n0_grid, solver, &r.params, &r.spectrum_options())?;

    let mut traces = Vec::new();
    let mut map = Vec::new();
    let mut peaks = Vec::new();
    for p in &points {
        let trace = p.series.truncated(r.t_final)?;
        for (t, v) in trace.times().into_iter().zip(trace.require(channel::EXCITED)?) {
            traces.push(vec![p.n0, t, *v]);
        }
        map.extend(spectrum_rows(&p.spectrum, Some(p.n0)));
        let row = p.row();
        peaks.push(vec![p.n0, row.omega_peak.unwrap_or(f64::NAN), row.omega_asymptote]);
    }
    out.table("scan_traces.csv", &["n0", "gt", "P_e"], &traces)?;
    out.table("scan_spectrum.csv", &["n0", "omega_over_g", "magnitude"], &map)?;
    out.table("scan_peaks.csv", &["n0", "omega_peak_over_g", "omega_asymptote_over_g"], &peaks)
}

#[derive(Debug, Clone, Serialize)]
pub struct FrequencySummary {
    pub quantum: f64,
    pub quantum_exact: f64,
    pub duffing: f64,
    pub mqc_focused: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonSummary {
    pub schema_version: u32,
    pub code_version: &'static str,
    pub config: Resolved,
    pub dominant_frequency: FrequencySummary,
    /// `|ω_duffing − ω_mqc| / 2g`.
    pub duffing_mqc_frequency_deviation: f64,
    /// `|ω_duffing − ω_quantum| / 2g`.
    pub duffing_quantum_frequency_deviation: f64,
    pub max_pairwise_deviation: Vec<PairDeviation>,
    /// Duffing vs MQC focused after removing the `2Ω_γ` ripple.
    pub duffing_mqc_smoothed_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ensemble_time_average_15_25: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairDeviation {
    pub a: String,
    pub b: String,
    pub max_abs: f64,
}

/// The traces and spectra behind `compare` and `ground`.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub quantum: TimeSeries,
    pub duffing: TimeSeries,
    pub mqc_focused: TimeSeries,
    pub ensemble: Option<TimeSeries>,
    pub spectra: [Spectrum; 3],
}

/// Quantum, Duffing and focused-MQC traces on one grid, plus the ensemble if requested.
pub fn comparison(r: &Resolved, with_ensemble: bool) -> Result<Comparison> {
    let p = &r.params;
    let duffing_params = match r.initial_tls {
        InitialTls::Excited => DuffingParams::excited(r.n0, p.g)?,
        InitialTls::Ground => DuffingParams::ground(r.n0, p.g)?,
    };
    let focused = focused_initial(r.n0, p)?.state(r.initial_tls);
    let long = r.t_final.max(r.duration);
    let integrator = r.integrator(*p);
    let grid_long = integrator.output_grid(long);

    let quantum = propagate_quantum(p, r.initial_tls, grid_long);
    let duffing = solve_duffing(&duffing_params, grid_long)?;
    let mqc = integrator.integrate(&focused, long)?.series;

    let opts = r.spectrum_options();
    let spectra = [rabi_spectrum(&quantum, &opts)?, rabi_spectrum(&duffing, &opts)?, rabi_spectrum(&mqc, &opts)?];

    let ensemble = if with_ensemble {
        let spec = EnsembleSpec {
            sampler: match r.sampler {
                SamplerKind::Focused => Sampler::Focused { n0: r.n0 },
                SamplerKind::Wigner => Sampler::Wigner,
            },
            trajectories: r.trajectories,
            initial_tls: r.initial_tls,
            seed: r.seed,
            dt: r.dt,
            t_final: r.t_final,
        };
        Some(run_ensemble_with_workers(&spec, p, r.workers)?)
    } else {
        None
    };

    Ok(Comparison {
        quantum: quantum.truncated(r.t_final)?,
        duffing: duffing.truncated(r.t_final)?,
        mqc_focused: mqc.truncated(r.t_final)?,
        ensemble,
        spectra,
    })
}

impl Comparison {
    pub fn summary(&self, r: &Resolved) -> Result<ComparisonSummary> {
        let [q, d, m] = &self.spectra;
        let freq = FrequencySummary {
            quantum: peak_or_nan(q),
            quantum_exact: rabi_frequency(&r.params),
            duffing: peak_or_nan(d),
            mqc_focused: peak_or_nan(m),
        };
        let two_g = 2.0 * r.params.g;

        let mut named: Vec<(&str, &[f64])> = vec![
            ("quantum", self.quantum.require(channel::EXCITED)?),
            ("duffing", self.duffing.require(channel::EXCITED)?),
            ("mqc_focused", self.mqc_focused.require(channel::EXCITED)?),
        ];
        if let Some(e) = &self.ensemble {
            named.push(("mqc_ensemble", e.require(channel::EXCITED)?));
        }
        let mut pairs = Vec::new();
        for i in 0..named.len() {
            for j in i + 1..named.len() {
                pairs.push(PairDeviation {
                    a: named[i].0.into(),
                    b: named[j].0.into(),
                    max_abs: max_abs_diff(named[i].1, named[j].1),
                });
            }
        }
        let smoothed = remove_optical_ripple(named[2].1, self.mqc_focused.step(), r.params.omega_gamma);

        Ok(ComparisonSummary {
            schema_version: SCHEMA_VERSION,
            code_version: env!("CARGO_PKG_VERSION"),
            config: r.clone(),
            duffing_mqc_frequency_deviation: (freq.duffing - freq.mqc_focused).abs() / two_g,
            duffing_quantum_frequency_deviation: (freq.duffing - freq.quantum).abs() / two_g,
            dominant_frequency: freq,
            max_pairwise_deviation: pairs,
            duffing_mqc_smoothed_deviation: max_abs_diff(&smoothed, named[1].1),
            ensemble_time_average_15_25: match &self.ensemble {
                Some(e) if r.t_final >= 25.0 => Some(e.time_average(channel::EXCITED, 15.0, 25.0)?),
                _ => None,
            },
        })
    }
}

fn write_comparison(r: &Resolved, out: &mut Output, prefix: &str, cmp: &Comparison) -> Result<()> {
    out.series(&format!("{prefix}_quantum.csv"), &cmp.quantum, &[channel::EXCITED])?;
    out.series(&format!("{prefix}_duffing.csv"), &cmp.duffing, &[channel::EXCITED])?;
    out.series(
        &format!("{prefix}_mqc_focused.csv"),
        &cmp.mqc_focused,
        &[channel::EXCITED, channel::OCCUPANCY, channel::ENERGY, channel::RE_Z, channel::IM_Z],
    )?;
    if let Some(e) = &cmp.ensemble {
        out.series(&format!("{prefix}_mqc_ensemble.csv"), e, &[channel::EXCITED, channel::OCCUPANCY, channel::ENERGY])?;
    }
    for (name, s) in ["quantum", "duffing", "mqc_focused"].iter().zip(&cmp.spectra) {
        out.spectrum(&format!("{prefix}_spectrum_{name}.csv"), s)?;
    }
    out.summary(&format!("{prefix}_summary.json"), &cmp.summary(r)?)
}

/// Quantum, Duffing, focused MQC and ensemble MQC over `[0, t_final]`.
pub fn cmd_compare(r: &Resolved, out: &mut Output) -> Result<()> {
    let cmp = comparison(r, true)?;
    write_comparison(r, out, "compare", &cmp)
}

/// As [`cmd_compare`] for the ground-state TLS protocol, without the ensemble.
pub fn cmd_ground(r: &Resolved, out: &mut Output) -> Result<()> {
    let cmp = comparison(r, false)?;
    write_comparison(r, out, "ground", &cmp)
}

/// One detuning of the off-resonant scan.
#[derive(Debug, Clone)]
pub struct DetuningPoint {
    pub ratio: f64,
    pub params: ModelParams,
    pub mqc: TimeSeries,
    pub quantum: TimeSeries,
    pub omega_mqc: f64,
    pub omega_quantum: f64,
}

/// Focused MQC and quantum traces for every `Ω_e/Ω_γ` ratio.
pub fn detuning_scan(r: &Resolved) -> Result<Vec<DetuningPoint>> {
    use rayon::prelude::*;
    let opts = r.spectrum_options();
    let long = r.t_final.max(r.duration);
    r.omega_e_ratios
        .par_iter()
        .map(|&ratio| {
            let params = ModelParams { omega_e: ratio * r.params.omega_gamma, ..r.params };
            params.validate()?;
            let initial = focused_initial(r.n0, &params)?.state(r.initial_tls);
            let integrator = r.integrator(params);
            let mqc = integrator.integrate(&initial, long)?.series;
            let quantum = propagate_quantum(&params, r.initial_tls, integrator.output_grid(long));
            Ok(DetuningPoint {
                ratio,
                params,
                omega_mqc: peak_or_nan(&rabi_spectrum(&mqc, &opts)?),
                omega_quantum: peak_or_nan(&rabi_spectrum(&quantum, &opts)?),
                mqc: mqc.truncated(r.t_final)?,
                quantum: quantum.truncated(r.t_final)?,
            })
        })
        .collect()
}

pub fn cmd_offresonant(r: &Resolved, out: &mut Output) -> Result<()> {
    let points = detuning_scan(r)?;
    let long_form = |pick: fn(&DetuningPoint) -> &TimeSeries| -> Result<Vec<Vec<f64>>> {
        let mut rows = Vec::new();
        for p in &points {
            let s = pick(p);
            for (t, v) in s.times().into_iter().zip(s.require(channel::EXCITED)?) {
                rows.push(vec![p.ratio, t, *v]);
            }
        }
        Ok(rows)
    };
    let header = ["omega_e_over_omega_gamma", "gt", "P_e"];
    out.table("offresonant_mqc.csv", &header, &long_form(|p| &p.mqc)?)?;
    out.table("offresonant_quantum.csv", &header, &long_form(|p| &p.quantum)?)?;
    let rows: Vec<Vec<f64>> = points
        .iter()
        .map(|p| {
            vec![
                p.ratio,
                p.omega_mqc,
                p.omega_quantum,
                rabi_frequency(&p.params),
                (p.omega_mqc - p.omega_quantum).abs() / p.omega_quantum,
            ]
        })
        .collect();
    out.table(
        "offresonant_frequencies.csv",
        &[
            "omega_e_over_omega_gamma",
            "omega_mqc_over_g",
            "omega_quantum_over_g",
            "omega_quantum_exact_over_g",
            "relative_deviation",
        ],
        &rows,
    )
}

fn plot_script(command: Command) -> String {
    let body = match command {
        Command::Scan => {
            r#"traces = pd.read_csv("scan_traces.csv")
spec = pd.read_csv("scan_spectrum.csv")
peaks = pd.read_csv("scan_peaks.csv")
fig, (a, b) = plt.subplots(1, 2, figsize=(10, 4))
pa = traces.pivot(index="n0", columns="gt", values="P_e")
a.pcolormesh(pa.columns, pa.index, pa.values, shading="auto")
a.set_xlabel("gt"); a.set_ylabel("n0")
pb = spec.pivot(index="n0", columns="omega_over_g", values="magnitude")
b.pcolormesh(pb.columns, pb.index, pb.values, shading="auto")
b.plot(peaks.omega_asymptote_over_g, peaks.n0, "k--")
b.axvline(2.0, color="r", ls="--")
b.set_xlim(0, 6); b.set_xlabel("omega / g")
fig.savefig("scan.png", dpi=150)
"#
        }
        Command::Compare | Command::Ground => {
            let prefix = command.name();
            return format!(
                r#"import os
import pandas as pd
import matplotlib.pyplot as plt

os.chdir(os.path.dirname(os.path.abspath(__file__)))
fig, ax = plt.subplots(figsize=(7, 4))
for name, style in [("quantum", "-"), ("duffing", "--"), ("mqc_focused", ":"), ("mqc_ensemble", "-.")]:
    path = "{prefix}_" + name + ".csv"
    if os.path.exists(path):
        d = pd.read_csv(path)
        ax.plot(d.gt, d.P_e, style, label=name)
ax.set_xlabel("gt"); ax.set_ylabel("P_e"); ax.legend()
fig.savefig("{prefix}.png", dpi=150)
"#
            );
        }
        Command::Offresonant => {
            r#"fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
for ax, name in zip(axes, ["mqc", "quantum"]):
    d = pd.read_csv("offresonant_" + name + ".csv")
    p = d.pivot(index="omega_e_over_omega_gamma", columns="gt", values="P_e")
    ax.pcolormesh(p.columns, p.index, p.values, shading="auto", vmin=0, vmax=1)
    ax.set_title(name); ax.set_xlabel("gt")
axes[0].set_ylabel("Omega_e / Omega_gamma")
fig.savefig("offresonant.png", dpi=150)
"#
        }
    };
    format!(
        "import os\nimport pandas as pd\nimport matplotlib.pyplot as plt\n\nos.chdir(os.path.dirname(os.path.abspath(__file__)))\n{body}"
    )
}
