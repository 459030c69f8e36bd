use mqc_rabi::model::InitialTls;
use mqc_rabi::quantum::{
    amplitudes_at, detuned_minimum, jc_eigensystem, jc_population_resonant, propagate_quantum, rabi_frequency,
};
use mqc_rabi::series::channel;
use mqc_rabi::spectral::{rabi_spectrum, SpectrumOptions};
use mqc_rabi::{ModelParams, TimeGrid};
use nalgebra::{Complex, Matrix2, SymmetricEigen};
use proptest::prelude::*;

fn hamiltonian(p: &ModelParams) -> Matrix2<f64> {
    Matrix2::new(p.omega_e + 0.5 * p.omega_gamma, p.g, p.g, 1.5 * p.omega_gamma)
}

/// `|⟨φ_e| e^{-iHt} |start⟩|²` from a dense matrix exponential.
fn expm_population(p: &ModelParams, start: usize, t: f64) -> f64 {
    let h = hamiltonian(p).map(|x| Complex::new(0.0, -x * t));
    h.exp()[(0, start)].norm_sqr()
}

#[test]
fn detuned_population_matches_matrix_exponential() {
    for ratio in [0.9, 0.95, 1.0, 1.03, 1.1] {
        let p = ModelParams::new(50.0 * ratio, 50.0, 1.0).unwrap();
        let grid = TimeGrid::new(0.05, 501).unwrap();
        let s = propagate_quantum(&p, InitialTls::Excited, grid);
        let pe = s.require(channel::EXCITED).unwrap();
        for (i, t) in grid.times().enumerate() {
            let oracle = expm_population(&p, 0, t);
            assert!((pe[i] - oracle).abs() < 1e-9, "ratio {ratio} t {t}: {} vs {oracle}", pe[i]);
        }
    }
}

#[test]
fn ground_start_matches_matrix_exponential() {
    let p = ModelParams::resonant(50.0).unwrap();
    let grid = TimeGrid::new(0.01, 2501).unwrap();
    let s = propagate_quantum(&p, InitialTls::Ground, grid);
    let pe = s.require(channel::EXCITED).unwrap();
    for (i, t) in grid.times().enumerate().step_by(7) {
        assert!((pe[i] - expm_population(&p, 1, t)).abs() < 1e-9);
        assert!((pe[i] - (0.5 - 0.5 * (2.0 * t).cos())).abs() < 1e-12);
    }
    assert_eq!(pe[0], 0.0);
    let half_pi = (std::f64::consts::FRAC_PI_2 / 0.01).round() as usize;
    assert!(pe[half_pi] > 0.9999);
}

#[test]
fn splitting_matches_dense_eigensolver() {
    for (oe, og, g) in [(1.0, 1.0, 0.02), (50.0, 50.0, 1.0), (45.0, 50.0, 1.0), (1.2, 1.0, 0.3)] {
        let p = ModelParams::new(oe, og, g).unwrap();
        let dense = SymmetricEigen::new(hamiltonian(&p));
        let mut ev: Vec<f64> = dense.eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        let eig = jc_eigensystem(&p);
        assert!((eig.energies[0] - ev[0]).abs() < 1e-12 * ev[0].abs().max(1.0));
        assert!((eig.energies[1] - ev[1]).abs() < 1e-12 * ev[1].abs().max(1.0));
        assert!((eig.splitting() - (ev[0] - ev[1])).abs() < 1e-12);
    }
    let eig = jc_eigensystem(&ModelParams::new(1.0, 1.0, 0.02).unwrap());
    assert!((eig.splitting() - 0.04).abs() < 1e-14);
}

#[test]
fn resonant_spectrum_peaks_at_two_g() {
    let p = ModelParams::resonant(50.0).unwrap();
    let s = propagate_quantum(&p, InitialTls::Excited, TimeGrid::spanning(200.0, 0.01).unwrap());
    let spec = rabi_spectrum(&s, &SpectrumOptions::default()).unwrap();
    let peak = spec.dominant_peak.unwrap();
    assert!((peak.frequency - 2.0).abs() <= spec.d_omega, "{peak:?}");
}

fn params_strategy() -> impl Strategy<Value = ModelParams> {
    (0.5f64..1.5, 10.0f64..100.0, 0.1f64..3.0)
        .prop_map(|(ratio, og, g)| ModelParams::new(ratio * og, og, g).unwrap())
}

proptest! {
    #[test]
    fn populations_sum_to_one(p in params_strategy(), t in 0.0f64..100.0, ground in any::<bool>()) {
        let tls = if ground { InitialTls::Ground } else { InitialTls::Excited };
        let [ce, cg] = amplitudes_at(&jc_eigensystem(&p), tls, t);
        prop_assert!((ce.norm_sqr() + cg.norm_sqr() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn resonant_period_is_pi_over_g(g in 0.1f64..5.0, t in 0.0f64..25.0) {
        let p = ModelParams::new(50.0, 50.0, g).unwrap();
        let eig = jc_eigensystem(&p);
        let a = amplitudes_at(&eig, InitialTls::Excited, t)[0].norm_sqr();
        let b = amplitudes_at(&eig, InitialTls::Excited, t + std::f64::consts::PI / g)[0].norm_sqr();
        prop_assert!((a - b).abs() < 1e-12);
        prop_assert!((a - jc_population_resonant(g, t)).abs() < 1e-12);
    }

    #[test]
    fn detuned_minimum_is_reached_and_grows_with_detuning(
        og in 10.0f64..100.0, g in 0.2f64..2.0, d1 in 0.0f64..5.0, extra in 0.01f64..5.0
    ) {
        let at = |d: f64| ModelParams::new(og + 2.0 * d, og, g).unwrap();
        let (p1, p2) = (at(d1), at(d1 + extra));
        prop_assert!(detuned_minimum(&p2) > detuned_minimum(&p1));

        let eig = jc_eigensystem(&p1);
        let half_period = std::f64::consts::PI / rabi_frequency(&p1);
        let pe_min = amplitudes_at(&eig, InitialTls::Excited, half_period)[0].norm_sqr();
        prop_assert!((pe_min - detuned_minimum(&p1)).abs() < 1e-10);
        for k in 0..64 {
            let t = 2.0 * half_period * k as f64 / 64.0;
            prop_assert!(amplitudes_at(&eig, InitialTls::Excited, t)[0].norm_sqr() >= pe_min - 1e-12);
        }
    }
}
