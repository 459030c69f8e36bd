//! Focused MQC and quantum Rabi frequencies as the TLS is detuned.

use mqc_rabi::experiments::{default_omega_e_ratios, detuning_scan, Command, ExperimentConfig, Overrides};

fn main() -> mqc_rabi::Result<()> {
    let config = ExperimentConfig {
        command: Command::Offresonant,
        overrides: Overrides { omega_e_ratios: Some(default_omega_e_ratios()), ..Default::default() },
        out_dir: ".".into(),
        emit_plot_script: false,
    };
    println!("{:>6} {:>8} {:>8} {:>8}", "ratio", "mqc", "quantum", "rel");
    for p in detuning_scan(&config.resolve()?)? {
        let rel = (p.omega_mqc - p.omega_quantum).abs() / p.omega_quantum;
        println!("{:6.2} {:8.4} {:8.4} {rel:8.3}", p.ratio, p.omega_mqc, p.omega_quantum);
    }
    Ok(())
}
