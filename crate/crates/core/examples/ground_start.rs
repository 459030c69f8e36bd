//! TLS in its ground state with one photon in the mode.

use mqc_rabi::duffing::{population_frequency, DuffingParams};
use mqc_rabi::experiments::{comparison, Command, ExperimentConfig, Overrides};

fn main() -> mqc_rabi::Result<()> {
    let config = ExperimentConfig {
        command: Command::Ground,
        overrides: Overrides::default(),
        out_dir: ".".into(),
        emit_plot_script: false,
    };
    let r = config.resolve()?;
    let cmp = comparison(&r, false)?;
    let summary = cmp.summary(&r)?;
    let f = &summary.dominant_frequency;
    println!("n0 = {}", r.n0);
    println!("quantum {:.5}  duffing {:.5}  mqc {:.5}", f.quantum, f.duffing, f.mqc_focused);
    println!("duffing from exact period {:.5}", population_frequency(&DuffingParams::ground(r.n0, r.params.g)?)?);
    for d in &summary.max_pairwise_deviation {
        println!("max |{} - {}| = {:.4}", d.a, d.b, d.max_abs);
    }
    Ok(())
}
