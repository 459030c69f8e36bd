//! Exact Jaynes–Cummings populations, resonant and detuned.

use mqc_rabi::model::InitialTls;
use mqc_rabi::quantum::{detuned_minimum, jc_eigensystem, propagate_quantum, rabi_frequency};
use mqc_rabi::series::channel;
use mqc_rabi::{ModelParams, TimeGrid};

fn main() -> mqc_rabi::Result<()> {
    let grid = TimeGrid::spanning(5.0, 0.5)?;
    println!("{:>5} {:>10} {:>10} {:>10}", "gt", "resonant", "detuned", "ground");

    let resonant = ModelParams::resonant(50.0)?;
    let detuned = ModelParams::new(52.0, 50.0, 1.0)?;
    let a = propagate_quantum(&resonant, InitialTls::Excited, grid);
    let b = propagate_quantum(&detuned, InitialTls::Excited, grid);
    let c = propagate_quantum(&resonant, InitialTls::Ground, grid);
    let (a, b, c) = (a.require(channel::EXCITED)?, b.require(channel::EXCITED)?, c.require(channel::EXCITED)?);
    for (i, t) in grid.times().enumerate() {
        println!("{t:5.1} {:10.6} {:10.6} {:10.6}", a[i], b[i], c[i]);
    }

    for p in [resonant, detuned] {
        let eig = jc_eigensystem(&p);
        println!(
            "Ω_e = {}: ε± = {:.6} / {:.6}, Rabi frequency {:.6}, minimum P_e {:.6}",
            p.omega_e,
            eig.energies[0],
            eig.energies[1],
            rabi_frequency(&p),
            detuned_minimum(&p)
        );
    }
    Ok(())
}
