//! Dominant Rabi frequency of the Duffing reduction against initial occupancy.
//!
//! ```text
//! cargo run --release --example duffing_scan -- 0.1 0.59 2 20
//! ```

use mqc_rabi::duffing::{population_frequency, DuffingParams};
use mqc_rabi::spectral::{dominant_frequency_scan, ScanSolver, SpectrumOptions};
use mqc_rabi::ModelParams;

fn main() -> mqc_rabi::Result<()> {
    let mut grid: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if grid.is_empty() {
        grid = vec![0.01, 0.1, 0.3, 0.59, 1.0, 2.0, 5.0, 10.0, 20.0];
    }
    grid.sort_by(f64::total_cmp);

    let rows = dominant_frequency_scan(&grid, ScanSolver::Duffing, &ModelParams::default(), &SpectrumOptions::default())?;
    println!("{:>6} {:>10} {:>10} {:>10}", "n0", "spectral", "exact", "asymptote");
    for r in rows {
        // exact: from the quadrature period
        let exact = population_frequency(&DuffingParams::excited(r.n0, 1.0)?).unwrap_or(f64::NAN);
        let peak = r.omega_peak.unwrap_or(f64::NAN);
        println!("{:6.2} {peak:10.5} {exact:10.5} {:10.5}", r.n0, r.omega_asymptote);
    }
    Ok(())
}
