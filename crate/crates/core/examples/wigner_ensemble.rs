//! Wigner-sampled ensemble: the oscillation dephases and P_e settles above 1/2.
//!
//! ```text
//! cargo run --release --example wigner_ensemble -- 20000
//! ```

use mqc_rabi::ensemble::run_ensemble;
use mqc_rabi::model::{EnsembleSpec, InitialTls, Sampler};
use mqc_rabi::series::channel;
use mqc_rabi::ModelParams;

fn main() -> mqc_rabi::Result<()> {
    let trajectories = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2000);
    let p = ModelParams::resonant(50.0)?;
    let spec = EnsembleSpec {
        sampler: Sampler::Wigner,
        trajectories,
        initial_tls: InitialTls::Excited,
        seed: 1,
        dt: p.default_dt(),
        t_final: 25.0,
    };
    let s = run_ensemble(&spec, &p)?;
    let (pe, n) = (s.require(channel::EXCITED)?, s.require(channel::OCCUPANCY)?);
    for i in (0..s.len()).step_by(100) {
        println!("gt = {:5.1}  P_e = {:.4}  n = {:.4}", s.grid().time(i), pe[i], n[i]);
    }
    println!("{trajectories} trajectories, mean P_e over [15, 25]: {:.4}", s.time_average(channel::EXCITED, 15.0, 25.0)?);
    Ok(())
}
