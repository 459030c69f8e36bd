//! Uniformly sampled, multi-channel time series.

use crate::error::{Error, Result};

/// Channel names used across the crate.
pub mod channel {
    pub const EXCITED: &str = "P_e";
    pub const PHOTON_STATE: &str = "P_gamma";
    pub const OCCUPANCY: &str = "n";
    pub const ENERGY: &str = "energy";
    pub const RE_Z: &str = "re_z";
    pub const IM_Z: &str = "im_z";
    pub const NORM: &str = "norm";
    pub const AMPLITUDE: &str = "c";
    pub const RATE: &str = "v";
}

/// A uniform time grid `t_i = i · step`, `i = 0..len`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub step: f64,
    pub len: usize,
}

impl TimeGrid {
    pub fn new(step: f64, len: usize) -> Result<Self> {
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::Contract(format!("grid step must be positive, got {step}")));
        }
        if len == 0 {
            return Err(Error::Contract("grid must contain at least one point".into()));
        }
        Ok(TimeGrid { step, len })
    }

    /// Grid covering `[0, t_final]` with the given spacing (the last point may
    /// fall short of `t_final` by less than one step).
    pub fn spanning(t_final: f64, step: f64) -> Result<Self> {
        let len = (t_final / step + 1e-9).floor() as usize + 1;
        Self::new(step, len)
    }

    pub fn time(&self, i: usize) -> f64 {
        i as f64 * self.step
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len).map(move |i| self.time(i))
    }

    pub fn end(&self) -> f64 {
        self.time(self.len - 1)
    }
}

/// Named real channels sharing one uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    grid: TimeGrid,
    channels: Vec<(String, Vec<f64>)>,
}

impl TimeSeries {
    pub fn new(grid: TimeGrid) -> Self {
        TimeSeries { grid, channels: Vec::new() }
    }

    /// Builds a series from explicit sample times, checking they are uniform.
    pub fn from_times(times: &[f64]) -> Result<Self> {
        if times.len() < 2 {
            return Err(Error::Contract("need at least two sample times".into()));
        }
        if times[0].abs() > 1e-12 {
            return Err(Error::Contract("time grid must start at zero".into()));
        }
        let step = times[1] - times[0];
        for (i, t) in times.iter().enumerate() {
            let expected = i as f64 * step;
            if (t - expected).abs() > 1e-12 * expected.abs().max(step) {
                return Err(Error::Contract(format!("non-uniform time grid at index {i}")));
            }
        }
        Ok(TimeSeries::new(TimeGrid::new(step, times.len())?))
    }

    pub fn with_channel(mut self, name: &str, values: Vec<f64>) -> Result<Self> {
        self.push_channel(name, values)?;
        Ok(self)
    }

    pub fn push_channel(&mut self, name: &str, values: Vec<f64>) -> Result<()> {
        if values.len() != self.grid.len {
            return Err(Error::Contract(format!(
                "channel {name} has {} samples, grid has {}",
                values.len(),
                self.grid.len
            )));
        }
        match self.channels.iter_mut().find(|(n, _)| n == name) {
            Some((_, v)) => *v = values,
            None => self.channels.push((name.to_string(), values)),
        }
        Ok(())
    }

    pub fn grid(&self) -> TimeGrid {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.grid.len
    }

    pub fn is_empty(&self) -> bool {
        self.grid.len == 0
    }

    pub fn step(&self) -> f64 {
        self.grid.step
    }

    pub fn times(&self) -> Vec<f64> {
        self.grid.times().collect()
    }

    pub fn channel(&self, name: &str) -> Option<&[f64]> {
        self.channels.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    pub fn require(&self, name: &str) -> Result<&[f64]> {
        self.channel(name).ok_or_else(|| Error::Contract(format!("series has no channel {name}")))
    }

    pub fn channel_names(&self) -> impl Iterator<Item = &str> {
        self.channels.iter().map(|(n, _)| n.as_str())
    }

    /// Keeps only points with `t <= t_end`.
    pub fn truncated(&self, t_end: f64) -> Result<Self> {
        let len = ((t_end / self.grid.step + 1e-9).floor() as usize + 1).min(self.grid.len);
        let mut out = TimeSeries::new(TimeGrid::new(self.grid.step, len)?);
        for (name, v) in &self.channels {
            out.channels.push((name.clone(), v[..len].to_vec()));
        }
        Ok(out)
    }

    /// Mean of a channel over samples with `t_start <= t <= t_end`.
    pub fn time_average(&self, name: &str, t_start: f64, t_end: f64) -> Result<f64> {
        let v = self.require(name)?;
        let (sum, count) = self
            .grid
            .times()
            .zip(v)
            .filter(|(t, _)| *t >= t_start - 1e-12 && *t <= t_end + 1e-12)
            .fold((0.0, 0usize), |(s, c), (_, x)| (s + x, c + 1));
        if count == 0 {
            return Err(Error::InsufficientData { covered: self.grid.end(), required: t_start });
        }
        Ok(sum / count as f64)
    }
}

/// Largest pointwise absolute difference between two equally long slices.
pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
