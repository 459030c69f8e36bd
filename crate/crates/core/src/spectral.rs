//! Windowed Fourier analysis of population traces and dominant-frequency scans.

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::duffing::{asymptotic_frequency, solve_duffing, DuffingParams};
use crate::error::{Error, Result};
use crate::model::ModelParams;
use crate::mqc::{focused_initial, MqcIntegrator};
use crate::series::{channel, TimeGrid, TimeSeries};

/// Local maxima below this fraction of the global maximum are ignored.
pub const PEAK_FLOOR: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    /// 1/e time of the exponential window.
    pub window_tau: f64,
    /// Subtracted before windowing.
    pub baseline: f64,
    /// Length of the analysed stretch, starting at `t = 0`.
    pub duration: f64,
    /// Minimum zero-padding factor; the padded length is rounded up to a power of two.
    pub pad_factor: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        SpectrumOptions { window_tau: 20.0, baseline: 0.5, duration: 200.0, pad_factor: 8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub frequency: f64,
    pub magnitude: f64,
}

/// Normalized magnitude spectrum on `ω_k = k · d_omega`, `k = 0..`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub d_omega: f64,
    pub magnitudes: Vec<f64>,
    pub dominant_peak: Option<Peak>,
}

impl Spectrum {
    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.magnitudes.len()).map(move |k| k as f64 * self.d_omega)
    }

    /// Interior local maxima above [`PEAK_FLOOR`], refined by parabolic
    /// interpolation, in ascending frequency.
    pub fn peaks(&self) -> Vec<Peak> {
        let m = &self.magnitudes;
        let max = m.iter().cloned().fold(0.0, f64::max);
        if max <= 0.0 {
            return Vec::new();
        }
        (1..m.len().saturating_sub(1))
            .filter(|&k| m[k] > m[k - 1] && m[k] >= m[k + 1] && m[k] >= PEAK_FLOOR * max)
            .map(|k| {
                let (a, b, c) = (m[k - 1], m[k], m[k + 1]);
                let denom = a - 2.0 * b + c;
                let delta = if denom != 0.0 { 0.5 * (a - c) / denom } else { 0.0 };
                Peak { frequency: (k as f64 + delta) * self.d_omega, magnitude: b - 0.25 * (a - c) * delta }
            })
            .collect()
    }

    /// Peaks other than the dominant one.
    pub fn minor_peaks(&self) -> Vec<Peak> {
        let dominant = self.dominant_peak;
        self.peaks().into_iter().filter(|p| Some(*p) != dominant).collect()
    }

    /// Magnitude at the grid point nearest to `omega`.
    pub fn magnitude_at(&self, omega: f64) -> f64 {
        let k = (omega / self.d_omega).round() as usize;
        self.magnitudes.get(k).copied().unwrap_or(0.0)
    }
}

/// Windowed spectrum of the `P_e` channel.
///
/// The trace is truncated to `duration`, the baseline is subtracted, the
/// result is multiplied by `exp(−t/window_tau)`, zero-padded and Fourier
/// transformed. Magnitudes of the `ω ≥ 0` half are normalized to a maximum of
/// one. The dominant peak is the highest interior local maximum.
pub fn rabi_spectrum(series: &TimeSeries, opts: &SpectrumOptions) -> Result<Spectrum> {
    spectrum_of(series.require(channel::EXCITED)?, series.step(), opts)
}

/// As [`rabi_spectrum`] for a bare sample slice with uniform spacing `step`.
pub fn spectrum_of(values: &[f64], step: f64, opts: &SpectrumOptions) -> Result<Spectrum> {
    if !(opts.window_tau > 0.0 && opts.duration > 0.0 && opts.pad_factor >= 1) {
        return Err(Error::Domain(format!("invalid spectrum options {opts:?}")));
    }
    let covered = step * values.len().saturating_sub(1) as f64;
    if covered < opts.duration * (1.0 - 1e-9) {
        return Err(Error::InsufficientData { covered, required: opts.duration });
    }
    let len = (opts.duration / step + 1e-9).floor() as usize + 1;
    let padded = (opts.pad_factor * len).next_power_of_two();

    let mut buf: Vec<Complex64> = values[..len]
        .iter()
        .enumerate()
        .map(|(i, v)| Complex64::new((v - opts.baseline) * (-(i as f64 * step) / opts.window_tau).exp(), 0.0))
        .collect();
    buf.resize(padded, Complex64::new(0.0, 0.0));
    FftPlanner::new().plan_fft_forward(padded).process(&mut buf);

    let mut magnitudes: Vec<f64> = buf[..=padded / 2].iter().map(|c| c.norm() * step).collect();
    let max = magnitudes.iter().cloned().fold(0.0, f64::max);
    if max > 0.0 {
        magnitudes.iter_mut().for_each(|m| *m /= max);
    }
    let mut spectrum = Spectrum {
        d_omega: 2.0 * std::f64::consts::PI / (padded as f64 * step),
        magnitudes,
        dominant_peak: None,
    };
    spectrum.dominant_peak = spectrum.peaks().into_iter().max_by(|a, b| a.magnitude.total_cmp(&b.magnitude));
    Ok(spectrum)
}

/// Centered moving average over `width` samples (odd; shrunk at the edges).
pub fn boxcar_smooth(values: &[f64], width: usize) -> Vec<f64> {
    let half = width / 2;
    let mut prefix = Vec::with_capacity(values.len() + 1);
    prefix.push(0.0);
    for v in values {
        prefix.push(prefix.last().unwrap() + v);
    }
    (0..values.len())
        .map(|i| {
            let lo = i.saturating_sub(half);
            let hi = (i + half + 1).min(values.len());
            (prefix[hi] - prefix[lo]) / (hi - lo) as f64
        })
        .collect()
}

/// Removes the `2Ω_γ` counter-rotating ripple with a boxcar one ripple period wide.
pub fn remove_optical_ripple(values: &[f64], step: f64, omega_gamma: f64) -> Vec<f64> {
    let period = std::f64::consts::PI / omega_gamma;
    let width = ((period / step).round() as usize) | 1;
    boxcar_smooth(values, width)
}

/// Which model produces `P_e` for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanSolver {
    Duffing,
    MqcFocused,
}

/// One scanned occupancy with its trace and spectrum.
#[derive(Debug, Clone)]
pub struct ScanPoint {
    pub n0: f64,
    pub series: TimeSeries,
    pub spectrum: Spectrum,
    pub omega_asymptote: f64,
}

impl ScanPoint {
    pub fn row(&self) -> ScanRow {
        ScanRow {
            n0: self.n0,
            omega_peak: self.spectrum.dominant_peak.map(|p| p.frequency),
            omega_asymptote: self.omega_asymptote,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub n0: f64,
    pub omega_peak: Option<f64>,
    pub omega_asymptote: f64,
}

/// `P_e` for the TLS starting excited with initial occupancy `n0`, from `0`
/// to `t_final`, sampled every `spacing`.
pub fn excited_trace(solver: ScanSolver, n0: f64, params: &ModelParams, t_final: f64, spacing: f64) -> Result<TimeSeries> {
    match solver {
        ScanSolver::Duffing => solve_duffing(&DuffingParams::excited(n0, params.g)?, TimeGrid::spanning(t_final, spacing)?),
        ScanSolver::MqcFocused => {
            let initial = focused_initial(n0, params)?.state(crate::model::InitialTls::Excited);
            Ok(MqcIntegrator::with_default_dt(*params).with_output_spacing(spacing).integrate(&initial, t_final)?.series)
        }
    }
}

/// Runs `solver` for every `n0` and analyses each trace. Points are computed
/// in parallel and returned in grid order.
pub fn scan(n0_grid: &[f64], solver: ScanSolver, params: &ModelParams, opts: &SpectrumOptions) -> Result<Vec<ScanPoint>> {
    if n0_grid.iter().any(|n| !(*n >= 0.0)) {
        return Err(Error::Domain("n0 grid values must be non-negative".into()));
    }
    if n0_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::Domain("n0 grid must be ascending".into()));
    }
    n0_grid
        .par_iter()
        .map(|&n0| {
            let point = || -> Result<ScanPoint> {
                let series = excited_trace(solver, n0, params, opts.duration, crate::model::OUTPUT_SPACING)?;
                let spectrum = rabi_spectrum(&series, opts)?;
                Ok(ScanPoint { n0, series, spectrum, omega_asymptote: asymptotic_frequency(n0, params.g)? })
            };
            point().map_err(|e| Error::Scan { n0, source: Box::new(e) })
        })
        .collect()
}

/// Dominant frequency per `n0`, with the asymptote `2g√(n0 + 1/2)` alongside.
pub fn dominant_frequency_scan(n0_grid: &[f64], solver: ScanSolver, params: &ModelParams, opts: &SpectrumOptions) -> Result<Vec<ScanRow>> {
    Ok(scan(n0_grid, solver, params, opts)?.iter().map(ScanPoint::row).collect())
}
