//! Exact full-quantum reference in the single-excitation Jaynes–Cummings
//! subspace `{|φ_e⟩ = |e,0⟩, |φ_γ⟩ = |g,1⟩}`.
//!
//! The 2×2 Hamiltonian carries `Ω_e + Ω_γ/2` and `3Ω_γ/2` on the diagonal
//! (the zero-point offset `Ω_γ/2` is kept so that the resonant mean energy is
//! `3Ω/2`) and `g` off the diagonal. Counter-rotating terms are not included.
//! Populations are obtained by eigendecomposition, never by time stepping.

use num_complex::Complex64;

use crate::model::{InitialTls, ModelParams};
use crate::series::{channel, TimeGrid, TimeSeries};

/// Excited-state population of the resonant JC model started in `|φ_e⟩`.
pub fn jc_population_resonant(g: f64, t: f64) -> f64 {
    0.5 + 0.5 * (2.0 * g * t).cos()
}

/// Eigenpairs of the single-excitation Hamiltonian, sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JcEigensystem {
    pub mean_energy: f64,
    /// `[ε₊, ε₋]`.
    pub energies: [f64; 2],
    /// `vectors[k] = (⟨φ_e|ψ_k⟩, ⟨φ_γ|ψ_k⟩)`.
    pub vectors: [[f64; 2]; 2],
}

impl JcEigensystem {
    pub fn splitting(&self) -> f64 {
        self.energies[0] - self.energies[1]
    }
}

/// Diagonalizes `[[Ω_e + Ω_γ/2, g], [g, 3Ω_γ/2]]`.
pub fn jc_eigensystem(params: &ModelParams) -> JcEigensystem {
    let upper = params.omega_e + 0.5 * params.omega_gamma;
    let lower = 1.5 * params.omega_gamma;
    let mean = 0.5 * (upper + lower);
    let half_gap = 0.5 * (upper - lower);
    let radius = half_gap.hypot(params.g);
    let theta = 0.5 * params.g.atan2(half_gap);
    let (s, c) = theta.sin_cos();
    JcEigensystem {
        mean_energy: mean,
        energies: [mean + radius, mean - radius],
        vectors: [[c, s], [s, -c]],
    }
}

/// Amplitudes `(c_e, c_γ)` at time `t`, with the global phase `e^{-i ε̄ t}` removed.
pub fn amplitudes_at(eig: &JcEigensystem, initial: InitialTls, t: f64) -> [Complex64; 2] {
    let start = match initial {
        InitialTls::Excited => [1.0, 0.0],
        InitialTls::Ground => [0.0, 1.0],
    };
    let mut out = [Complex64::new(0.0, 0.0); 2];
    for (v, e) in eig.vectors.iter().zip(eig.energies) {
        let overlap = v[0] * start[0] + v[1] * start[1];
        let phase = Complex64::from_polar(overlap, -(e - eig.mean_energy) * t);
        out[0] += phase * v[0];
        out[1] += phase * v[1];
    }
    out
}

/// Exact populations on a uniform grid.
///
/// `InitialTls::Ground` starts the system in `|φ_γ⟩` (TLS ground state plus
/// one photon). Channels: `P_e`, `P_gamma`.
pub fn propagate_quantum(params: &ModelParams, initial: InitialTls, grid: TimeGrid) -> TimeSeries {
    let eig = jc_eigensystem(params);
    let (pe, pg): (Vec<f64>, Vec<f64>) = grid
        .times()
        .map(|t| {
            let [ce, cg] = amplitudes_at(&eig, initial, t);
            (ce.norm_sqr(), cg.norm_sqr())
        })
        .unzip();
    TimeSeries::new(grid)
        .with_channel(channel::EXCITED, pe)
        .and_then(|s| s.with_channel(channel::PHOTON_STATE, pg))
        .expect("channels match grid length")
}

/// Minimum excited population reached from `|φ_e⟩`: `1 − g²/(g² + Δ²)`.
pub fn detuned_minimum(params: &ModelParams) -> f64 {
    let d = params.detuning();
    let g2 = params.g * params.g;
    1.0 - g2 / (g2 + d * d)
}

/// Population oscillation frequency `2√(g² + Δ²)`.
pub fn rabi_frequency(params: &ModelParams) -> f64 {
    2.0 * params.detuning().hypot(params.g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn resonant_population_examples() {
        assert_eq!(jc_population_resonant(1.0, 0.0), 1.0);
        assert!((jc_population_resonant(1.0, PI / 4.0) - 0.5).abs() < 1e-15);
        assert!(jc_population_resonant(1.0, PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn resonant_eigensystem() {
        let p = ModelParams::resonant(50.0).unwrap();
        let eig = jc_eigensystem(&p);
        assert_eq!(eig.mean_energy, 75.0);
        assert!((eig.energies[0] - 76.0).abs() < 1e-13);
        assert!((eig.energies[1] - 74.0).abs() < 1e-13);
        for (v, sign) in eig.vectors.iter().zip([1.0, -1.0]) {
            assert!((v[0] - FRAC_1_SQRT_2).abs() < 1e-15);
            assert!((v[1] - sign * FRAC_1_SQRT_2).abs() < 1e-15);
        }
    }

    #[test]
    fn decoupled_limit_gives_basis_states() {
        let p = ModelParams { g: 1e-300, ..ModelParams::new(1.2, 1.0, 1.0).unwrap() };
        let eig = jc_eigensystem(&p);
        assert!((eig.energies[0] - 1.7).abs() < 1e-15);
        assert!((eig.energies[1] - 1.5).abs() < 1e-15);
        assert!((eig.vectors[0][0].abs() - 1.0).abs() < 1e-15);
        assert!((eig.vectors[1][1].abs() - 1.0).abs() < 1e-15);

        // reversed ordering of the bare energies
        let p = ModelParams { g: 1e-300, ..ModelParams::new(0.8, 1.0, 1.0).unwrap() };
        let eig = jc_eigensystem(&p);
        assert!((eig.energies[0] - 1.5).abs() < 1e-15);
        assert!((eig.vectors[0][1].abs() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eigenvectors_orthonormal() {
        for (oe, og, g) in [(50.0, 50.0, 1.0), (45.0, 50.0, 1.0), (1.0, 1.0, 0.02), (3.0, 1.0, 0.7)] {
            let eig = jc_eigensystem(&ModelParams::new(oe, og, g).unwrap());
            let [a, b] = eig.vectors;
            assert!((a[0] * a[0] + a[1] * a[1] - 1.0).abs() < 1e-14);
            assert!((b[0] * b[0] + b[1] * b[1] - 1.0).abs() < 1e-14);
            assert!((a[0] * b[0] + a[1] * b[1]).abs() < 1e-14);
        }
    }

    #[test]
    fn ground_start_is_complementary() {
        let p = ModelParams::resonant(50.0).unwrap();
        let grid = TimeGrid::new(0.01, 2501).unwrap();
        let s = propagate_quantum(&p, InitialTls::Ground, grid);
        for (t, pe) in grid.times().zip(s.channel(channel::EXCITED).unwrap()) {
            assert!((pe - (0.5 - 0.5 * (2.0 * t).cos())).abs() < 1e-12);
        }
    }
}
