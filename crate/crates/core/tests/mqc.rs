use mqc_rabi::ensemble::run_ensemble_with_workers;
use mqc_rabi::model::{mode_coordinates, EnsembleSpec, InitialTls, MqcState, Sampler};
use mqc_rabi::mqc::{focused_initial, focused_initial_with_phase, wigner_draw, MqcIntegrator};
use mqc_rabi::series::{channel, max_abs_diff};
use mqc_rabi::ModelParams;
use num_complex::Complex64;

fn params() -> ModelParams {
    ModelParams::resonant(50.0).unwrap()
}

#[test]
fn norm_and_energy_conserved_at_default_dt() {
    let p = params();
    let integrator = MqcIntegrator::with_default_dt(p);
    let mut initial = vec![
        focused_initial(0.59, &p).unwrap().state(InitialTls::Excited),
        focused_initial(1.59, &p).unwrap().state(InitialTls::Ground),
        focused_initial(3.0, &p).unwrap().state(InitialTls::Excited),
    ];
    initial.extend((0..4).map(|i| wigner_draw(7, i, &p).state(InitialTls::Excited)));
    for s in initial {
        let traj = integrator.integrate(&s, 25.0).unwrap();
        assert!(traj.max_norm_error <= 1e-8, "norm {}", traj.max_norm_error);
        assert!(traj.max_energy_error <= 1e-8, "energy {}", traj.max_energy_error);
    }
}

#[test]
fn diagonal_offset_is_a_global_phase() {
    // recorded energy carries the shift as offset * |c|^2
    let p = params();
    let s = focused_initial(0.59, &p).unwrap().state(InitialTls::Excited);
    let base = MqcIntegrator::with_default_dt(p).integrate(&s, 25.0).unwrap().series;
    for offset in [-13.0, 0.7, 41.0] {
        let shifted = MqcIntegrator::with_default_dt(p).with_diagonal_offset(offset).integrate(&s, 25.0).unwrap().series;
        for name in [channel::EXCITED, channel::OCCUPANCY, channel::RE_Z, channel::IM_Z] {
            let d = max_abs_diff(base.require(name).unwrap(), shifted.require(name).unwrap());
            assert!(d <= 1e-10, "{name} moved by {d} with offset {offset}");
        }
        let e0 = base.require(channel::ENERGY).unwrap();
        let e1 = shifted.require(channel::ENERGY).unwrap();
        let norm = shifted.require(channel::NORM).unwrap();
        let d = e0.iter().zip(e1).zip(norm).map(|((a, b), w)| (b - a - offset * w).abs()).fold(0.0, f64::max);
        assert!(d <= 1e-10, "energy shift off by {d}");
    }
}

#[test]
fn step_halving_shows_fourth_order() {
    let p = params();
    let s = focused_initial(0.59, &p).unwrap().state(InitialTls::Excited);
    let run = |dt: f64| {
        let series = MqcIntegrator::new(p, dt).integrate(&s, 5.0).unwrap().series;
        series.require(channel::EXCITED).unwrap().to_vec()
    };
    let coarse = run(0.005);
    let mid = run(0.0025);
    let fine = run(0.00125);
    let d1 = max_abs_diff(&coarse, &mid);
    let d2 = max_abs_diff(&mid, &fine);
    assert!(d1 > 0.0);
    assert!(d2 <= d1 / 16.0, "changes {d1} then {d2}, ratio {}", d2 / d1);
}

/// Lab-frame equations stepped with plain RK4, no interaction picture.
fn lab_rk4(p: &ModelParams, s: MqcState, h: f64, steps: usize) -> MqcState {
    let i = Complex64::i();
    let f = |y: [Complex64; 3]| {
        let [ce, cg, z] = y;
        let n = z.norm_sqr();
        let x = 2.0 * z.re;
        let coh = 2.0 * (ce.conj() * cg).re;
        [
            -i * (p.omega_gamma * n + p.omega_e) * ce - i * p.g * x * cg,
            -i * p.omega_gamma * n * cg - i * p.g * x * ce,
            -i * p.omega_gamma * z - i * p.g * coh,
        ]
    };
    let add = |a: [Complex64; 3], b: [Complex64; 3], k: f64| [a[0] + b[0] * k, a[1] + b[1] * k, a[2] + b[2] * k];
    let mut y = [s.c_e, s.c_g, s.z];
    for _ in 0..steps {
        let k1 = f(y);
        let k2 = f(add(y, k1, h / 2.0));
        let k3 = f(add(y, k2, h / 2.0));
        let k4 = f(add(y, k3, h));
        for j in 0..3 {
            y[j] += (k1[j] + k2[j] * 2.0 + k3[j] * 2.0 + k4[j]) * (h / 6.0);
        }
    }
    MqcState::new(y[0], y[1], y[2])
}

#[test]
fn agrees_with_plain_lab_frame_rk4() {
    let p = params();
    for (n0, tls) in [(0.59, InitialTls::Excited), (1.59, InitialTls::Ground)] {
        let s = focused_initial(n0, &p).unwrap().state(tls);
        let traj = MqcIntegrator::with_default_dt(p).integrate(&s, 2.0).unwrap();
        let oracle = lab_rk4(&p, s, 2.0e-5, 100_000);
        let f = traj.final_state;
        assert!((f.c_e - oracle.c_e).norm() < 1e-7, "c_e {} vs {}", f.c_e, oracle.c_e);
        assert!((f.c_g - oracle.c_g).norm() < 1e-7, "c_g {} vs {}", f.c_g, oracle.c_g);
        assert!((f.z - oracle.z).norm() < 1e-7, "z {} vs {}", f.z, oracle.z);
    }
}

#[test]
fn free_oscillator_keeps_occupancy() {
    let p = ModelParams::new(50.0, 50.0, 1e-300).unwrap();
    let s = MqcState::with_tls(InitialTls::Excited, Complex64::new(1.0, 0.0));
    let series = MqcIntegrator::with_default_dt(p).integrate(&s, 25.0).unwrap().series;
    for n in series.require(channel::OCCUPANCY).unwrap() {
        assert!((n - 1.0).abs() < 1e-10);
    }
}

#[test]
fn vacuum_has_no_dynamics() {
    let p = params();
    let s = focused_initial(0.0, &p).unwrap().state(InitialTls::Excited);
    let series = MqcIntegrator::with_default_dt(p).integrate(&s, 25.0).unwrap().series;
    for v in series.require(channel::EXCITED).unwrap() {
        assert!((v - 1.0).abs() <= 1e-8);
    }
}

#[test]
fn phase_rotated_focused_states_share_envelope() {
    // the 2Ω ripple depends on the initial phase, the slow envelope does not
    let p = params();
    let integrator = MqcIntegrator::with_default_dt(p);
    let traces: Vec<Vec<f64>> = (0..4)
        .map(|k| {
            let phase = k as f64 * std::f64::consts::FRAC_PI_2;
            let s = focused_initial_with_phase(0.59, phase, &p).unwrap().state(InitialTls::Excited);
            let series = integrator.integrate(&s, 25.0).unwrap().series;
            mqc_rabi::spectral::remove_optical_ripple(series.require(channel::EXCITED).unwrap(), series.step(), 50.0)
        })
        .collect();
    for a in &traces {
        for b in &traces {
            assert!(max_abs_diff(a, b) <= 0.02);
        }
    }
}

#[test]
fn wigner_moments() {
    let p = params();
    let n = 100_000u64;
    let (mut sq, mut sp, mut sq2, mut sp2, mut sn) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for i in 0..n {
        let z = wigner_draw(11, i, &p).z;
        let (q, pp) = mode_coordinates(z, p.omega_gamma);
        sq += q;
        sp += pp;
        sq2 += q * q;
        sp2 += pp * pp;
        sn += z.norm_sqr();
    }
    let nf = n as f64;
    let var_q = 0.5 / p.omega_gamma;
    let var_p = 0.5 * p.omega_gamma;
    assert!((sn / nf - 0.5).abs() <= 0.01, "<n> = {}", sn / nf);
    assert!((sq / nf).abs() <= 3.0 * (var_q / nf).sqrt());
    assert!((sp / nf).abs() <= 3.0 * (var_p / nf).sqrt());
    assert!((sq2 / nf / var_q - 1.0).abs() <= 0.02);
    assert!((sp2 / nf / var_p - 1.0).abs() <= 0.02);
}

#[test]
fn wigner_streams_are_independent_of_order() {
    let p = params();
    let forward: Vec<Complex64> = (0..50).map(|i| wigner_draw(5, i, &p).z).collect();
    let backward: Vec<Complex64> = (0..50).rev().map(|i| wigner_draw(5, i, &p).z).collect();
    assert!(forward.iter().eq(backward.iter().rev()));
    assert_ne!(wigner_draw(5, 0, &p).z, wigner_draw(6, 0, &p).z);
}

#[test]
fn ensemble_is_bit_identical_across_worker_counts() {
    let p = params();
    let spec = EnsembleSpec {
        sampler: Sampler::Wigner,
        trajectories: 700,
        initial_tls: InitialTls::Excited,
        seed: 3,
        dt: p.default_dt(),
        t_final: 1.0,
    };
    let one = run_ensemble_with_workers(&spec, &p, Some(1)).unwrap();
    let four = run_ensemble_with_workers(&spec, &p, Some(4)).unwrap();
    let three = run_ensemble_with_workers(&spec, &p, Some(3)).unwrap();
    for name in one.channel_names() {
        assert_eq!(one.require(name).unwrap(), four.require(name).unwrap());
        assert_eq!(one.require(name).unwrap(), three.require(name).unwrap());
    }
}

#[test]
fn focused_ensemble_equals_single_trajectory() {
    let p = params();
    let spec = EnsembleSpec {
        sampler: Sampler::Focused { n0: 0.59 },
        trajectories: 1000,
        initial_tls: InitialTls::Excited,
        seed: 0,
        dt: p.default_dt(),
        t_final: 5.0,
    };
    let ens = run_ensemble_with_workers(&spec, &p, None).unwrap();
    let s = focused_initial(0.59, &p).unwrap().state(InitialTls::Excited);
    let single = MqcIntegrator::with_default_dt(p).integrate(&s, 5.0).unwrap().series;
    assert_eq!(ens.require(channel::EXCITED).unwrap(), single.require(channel::EXCITED).unwrap());
}
