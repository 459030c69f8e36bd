//! Runs an experiment and writes its CSV tables, sidecars and plot script.
//!
//! ```text
//! cargo run --release --example write_tables -- scan out/
//! ```

use mqc_rabi::experiments::{run, Command, ExperimentConfig, Overrides};

fn main() {
    let mut args = std::env::args().skip(1);
    let command = match args.next().as_deref() {
        Some("compare") => Command::Compare,
        Some("offresonant") => Command::Offresonant,
        Some("ground") => Command::Ground,
        _ => Command::Scan,
    };
    let out = args.next().unwrap_or_else(|| "out".into());
    let config = ExperimentConfig {
        command,
        // keeps `compare` quick; the binary defaults to 100 000
        overrides: Overrides { trajectories: Some(2000), ..Default::default() },
        out_dir: out.into(),
        emit_plot_script: true,
    };
    match run(&config) {
        Ok(files) => files.iter().for_each(|f| println!("{}", f.display())),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
