//! Single focused MQC trajectory against the Duffing and quantum curves.

use mqc_rabi::duffing::{solve_duffing, DuffingParams};
use mqc_rabi::model::{InitialTls, FOCUSED_N0};
use mqc_rabi::mqc::{focused_initial, MqcIntegrator};
use mqc_rabi::quantum::propagate_quantum;
use mqc_rabi::series::{channel, max_abs_diff};
use mqc_rabi::spectral::{rabi_spectrum, remove_optical_ripple, SpectrumOptions};
use mqc_rabi::ModelParams;

fn main() -> mqc_rabi::Result<()> {
    let p = ModelParams::resonant(50.0)?;
    let integrator = MqcIntegrator::with_default_dt(p);
    let traj = integrator.integrate(&focused_initial(FOCUSED_N0, &p)?.state(InitialTls::Excited), 200.0)?;
    let grid = integrator.output_grid(200.0);
    let quantum = propagate_quantum(&p, InitialTls::Excited, grid);
    let duffing = solve_duffing(&DuffingParams::excited(FOCUSED_N0, p.g)?, grid)?;

    println!("norm error {:.1e}, energy error {:.1e}", traj.max_norm_error, traj.max_energy_error);
    let opts = SpectrumOptions::default();
    for (name, s) in [("quantum", &quantum), ("duffing", &duffing), ("mqc", &traj.series)] {
        let w = rabi_spectrum(s, &opts)?.dominant_peak.map_or(f64::NAN, |p| p.frequency);
        println!("{name:>8}: dominant frequency {w:.5}");
    }

    let window = |s: &mqc_rabi::TimeSeries| s.truncated(25.0).and_then(|t| Ok(t.require(channel::EXCITED)?.to_vec()));
    let (q, d, m) = (window(&quantum)?, window(&duffing)?, window(&traj.series)?);
    let smooth = remove_optical_ripple(&m, traj.series.step(), p.omega_gamma);
    println!("max |P_e| difference over gt in [0, 25]:");
    println!("  mqc vs duffing {:.4} (ripple removed {:.4})", max_abs_diff(&m, &d), max_abs_diff(&smooth, &d));
    println!("  mqc vs quantum {:.4}", max_abs_diff(&m, &q));
    Ok(())
}
