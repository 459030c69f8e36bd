//! Parallel, bit-reproducible trajectory ensembles.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{EnsembleSpec, ModelParams, Sampler};
use crate::mqc::{focused_initial, wigner_draw, MqcIntegrator};
use crate::series::{channel, TimeSeries};

/// Trajectories summed sequentially inside one work unit. The chunk layout
/// depends only on the trajectory count, so the reduction tree is the same
/// for every worker count.
const CHUNK: u64 = 256;

/// Channels averaged over the ensemble.
pub const AVERAGED: [&str; 3] = [channel::EXCITED, channel::OCCUPANCY, channel::ENERGY];

/// Ensemble averages of [`AVERAGED`] using the global rayon pool.
pub fn run_ensemble(spec: &EnsembleSpec, params: &ModelParams) -> Result<TimeSeries> {
    run_ensemble_with_workers(spec, params, None)
}

/// As [`run_ensemble`], on a dedicated pool of `workers` threads when given.
pub fn run_ensemble_with_workers(spec: &EnsembleSpec, params: &ModelParams, workers: Option<usize>) -> Result<TimeSeries> {
    spec.validate(params)?;
    params.validate()?;
    let integrator = MqcIntegrator::new(*params, spec.dt);

    if let Sampler::Focused { n0 } = spec.sampler {
        // focused draws are identical, so one trajectory is the average
        let initial = focused_initial(n0, params)?.state(spec.initial_tls);
        let traj = integrator.integrate(&initial, spec.t_final).map_err(|e| Error::TrajectoryDiverged {
            index: 0,
            seed: spec.seed,
            source: Box::new(e),
        })?;
        return observables(&traj.series);
    }

    let grid = integrator.output_grid(spec.t_final);
    let chunks = spec.trajectories.div_ceil(CHUNK);
    let run_chunk = |chunk: u64| -> Result<Vec<Vec<f64>>> {
        let mut acc = vec![vec![0.0; grid.len]; AVERAGED.len()];
        let end = ((chunk + 1) * CHUNK).min(spec.trajectories);
        for index in chunk * CHUNK..end {
            let draw = wigner_draw(spec.seed, index, params);
            let traj = integrator.integrate(&draw.state(spec.initial_tls), spec.t_final).map_err(|e| {
                Error::TrajectoryDiverged { index, seed: spec.seed, source: Box::new(e) }
            })?;
            for (a, name) in acc.iter_mut().zip(AVERAGED) {
                add_into(a, traj.series.require(name)?);
            }
        }
        Ok(acc)
    };

    let partials: Vec<Vec<Vec<f64>>> = match workers {
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Config(format!("cannot build worker pool: {e}")))?;
            pool.install(|| (0..chunks).into_par_iter().map(run_chunk).collect::<Result<_>>())?
        }
        None => (0..chunks).into_par_iter().map(run_chunk).collect::<Result<_>>()?,
    };

    let mut total = vec![vec![0.0; grid.len]; AVERAGED.len()];
    for part in &partials {
        for (t, p) in total.iter_mut().zip(part) {
            add_into(t, p);
        }
    }
    let scale = 1.0 / spec.trajectories as f64;
    let mut out = TimeSeries::new(grid);
    for (name, mut values) in AVERAGED.into_iter().zip(total) {
        values.iter_mut().for_each(|x| *x *= scale);
        out.push_channel(name, values)?;
    }
    Ok(out)
}

fn add_into(acc: &mut [f64], v: &[f64]) {
    acc.iter_mut().zip(v).for_each(|(a, b)| *a += b);
}

fn observables(series: &TimeSeries) -> Result<TimeSeries> {
    let mut out = TimeSeries::new(series.grid());
    for name in AVERAGED {
        out.push_channel(name, series.require(name)?.to_vec())?;
    }
    Ok(out)
}
