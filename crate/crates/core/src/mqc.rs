//! Self-consistent Ehrenfest dynamics of a TLS coupled to a classical mode.
//!
//! The coupling keeps the full `g(z* + z)` form; no rotating-wave
//! approximation is applied here.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::model::{check_step, complex_coordinate, InitialTls, ModelParams, MqcState, OUTPUT_SPACING};
use crate::series::{channel, TimeGrid, TimeSeries};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Time derivatives of the amplitudes and the mode coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MqcDerivative {
    pub dc_e: Complex64,
    pub dc_g: Complex64,
    pub dz: Complex64,
}

/// Equations of motion in the lab frame.
///
/// The classical energy `Ω_γ n` enters both amplitudes as a common phase.
pub fn mqc_rhs(state: &MqcState, params: &ModelParams) -> Result<MqcDerivative> {
    let norm = state.norm_sqr();
    if (norm - 1.0).abs() > 1e-6 {
        return Err(Error::Contract(format!("state norm {norm} deviates from 1")));
    }
    Ok(rhs_unchecked(state, params))
}

fn rhs_unchecked(s: &MqcState, p: &ModelParams) -> MqcDerivative {
    let n = s.z.norm_sqr();
    let x = 2.0 * s.z.re;
    let classical = p.omega_gamma * n;
    MqcDerivative {
        dc_e: -I * (classical + p.omega_e) * s.c_e - I * p.g * x * s.c_g,
        dc_g: -I * classical * s.c_g - I * p.g * x * s.c_e,
        dz: -I * p.omega_gamma * s.z - I * p.g * coherence(s.c_e, s.c_g),
    }
}

/// `c_e* c_g + c_g* c_e`.
#[inline]
fn coherence(c_e: Complex64, c_g: Complex64) -> f64 {
    2.0 * (c_e.conj() * c_g).re
}

/// Ehrenfest energy `Ω_γ n + Ω_e |c_e|² + g (z* + z)(c_e* c_g + c.c.)`.
pub fn total_energy(state: &MqcState, params: &ModelParams) -> f64 {
    params.omega_gamma * state.z.norm_sqr()
        + params.omega_e * state.c_e.norm_sqr()
        + params.g * 2.0 * state.z.re * coherence(state.c_e, state.c_g)
}

/// A recorded MQC trajectory.
#[derive(Debug, Clone)]
pub struct Trajectory {
    /// Channels `P_e`, `n`, `energy`, `re_z`, `im_z`, `norm`.
    pub series: TimeSeries,
    pub final_state: MqcState,
    /// Largest `| |c_e|² + |c_g|² − 1 |` over recorded points.
    pub max_norm_error: f64,
    /// Largest `|H(t) − H(0)| / |H(0)|` over recorded points (absolute if `H(0) = 0`).
    pub max_energy_error: f64,
}

/// Fixed-step integrator for [`mqc_rhs`].
///
/// The fast free rotations `e^{-iΩ_e t}` and `e^{-iΩ_γ t}` are applied
/// exactly and the remaining coupling is advanced with classical RK4
/// (integrating-factor form). The common phase `Ω_γ ∫ n dt`, together with
/// any diagonal offset, is carried as a separate real accumulator, so the
/// amplitudes are stepped without it and multiplied by it on output. The norm is monitored, never corrected.
#[derive(Debug, Clone, Copy)]
pub struct MqcIntegrator {
    pub params: ModelParams,
    pub dt: f64,
    /// Spacing of recorded points; rounded down to a multiple of `dt`.
    pub output_spacing: f64,
    /// Constant added to both TLS diagonal entries (a pure global phase).
    pub diagonal_offset: f64,
}

impl MqcIntegrator {
    pub fn new(params: ModelParams, dt: f64) -> Self {
        MqcIntegrator { params, dt, output_spacing: OUTPUT_SPACING, diagonal_offset: 0.0 }
    }

    pub fn with_default_dt(params: ModelParams) -> Self {
        Self::new(params, params.default_dt())
    }

    pub fn with_output_spacing(mut self, spacing: f64) -> Self {
        self.output_spacing = spacing;
        self
    }

    pub fn with_diagonal_offset(mut self, offset: f64) -> Self {
        self.diagonal_offset = offset;
        self
    }

    pub fn stride(&self) -> usize {
        ((self.output_spacing / self.dt + 1e-9).floor() as usize).max(1)
    }

    /// Grid of recorded points for a run to `t_final`.
    pub fn output_grid(&self, t_final: f64) -> TimeGrid {
        let steps = self.step_count(t_final);
        let stride = self.stride();
        TimeGrid { step: stride as f64 * self.dt, len: steps / stride + 1 }
    }

    fn step_count(&self, t_final: f64) -> usize {
        (t_final / self.dt - 1e-9).ceil().max(0.0) as usize
    }

    fn energy(&self, s: &MqcState) -> f64 {
        total_energy(s, &self.params) + self.diagonal_offset * s.norm_sqr()
    }

    pub fn integrate(&self, initial: &MqcState, t_final: f64) -> Result<Trajectory> {
        self.params.validate()?;
        check_step(self.dt, t_final, &self.params)?;
        if !initial.is_finite() {
            return Err(Error::Contract("initial state is not finite".into()));
        }

        let p = &self.params;
        let h = self.dt;
        let stride = self.stride();
        let steps = self.step_count(t_final);
        let grid = self.output_grid(t_final);

        let rates = [
            -I * p.omega_e,
            Complex64::new(0.0, 0.0),
            -I * p.omega_gamma,
            Complex64::new(0.0, 0.0),
        ];
        let half: [Complex64; 4] = std::array::from_fn(|k| (rates[k] * (0.5 * h)).exp());
        let full: [Complex64; 4] = std::array::from_fn(|k| (rates[k] * h).exp());

        // Slow part of the flow: coupling plus the phase accumulator.
        let coupling = |y: &[Complex64; 4]| -> [Complex64; 4] {
            let x = 2.0 * y[2].re;
            [
                -I * p.g * x * y[1],
                -I * p.g * x * y[0],
                -I * p.g * coherence(y[0], y[1]),
                Complex64::new(p.omega_gamma * y[2].norm_sqr() + self.diagonal_offset, 0.0),
            ]
        };
        let mul = |a: &[Complex64; 4], b: &[Complex64; 4]| -> [Complex64; 4] { std::array::from_fn(|k| a[k] * b[k]) };
        let axpy = |a: &[Complex64; 4], s: f64, b: &[Complex64; 4]| -> [Complex64; 4] {
            std::array::from_fn(|k| a[k] + b[k] * s)
        };

        let to_state = |y: &[Complex64; 4]| {
            let phase = Complex64::from_polar(1.0, -y[3].re);
            MqcState::new(y[0] * phase, y[1] * phase, y[2])
        };

        let mut y = [initial.c_e, initial.c_g, initial.z, Complex64::new(0.0, 0.0)];
        let e0 = self.energy(initial);
        let energy_scale = if e0.abs() > 0.0 { e0.abs() } else { 1.0 };

        let mut rec = Recorder::with_capacity(grid.len);
        let mut max_norm_error = 0.0f64;
        let mut max_energy_error = 0.0f64;
        let mut record = |s: &MqcState, rec: &mut Recorder| {
            let e = self.energy(s);
            let norm = s.norm_sqr();
            max_norm_error = max_norm_error.max((norm - 1.0).abs());
            max_energy_error = max_energy_error.max((e - e0).abs() / energy_scale);
            rec.push(s, e, norm);
        };
        record(initial, &mut rec);

        for step in 1..=steps {
            let k1 = coupling(&y);
            let k2 = coupling(&mul(&half, &axpy(&y, 0.5 * h, &k1)));
            let ey_half = mul(&half, &y);
            let k3 = coupling(&axpy(&ey_half, 0.5 * h, &k2));
            let k4 = coupling(&axpy(&mul(&full, &y), h, &mul(&half, &k3)));
            let ek1 = mul(&full, &k1);
            let ek23 = mul(&half, &std::array::from_fn(|k| k2[k] + k3[k]));
            y = std::array::from_fn(|k| full[k] * y[k] + (ek1[k] + ek23[k] * 2.0 + k4[k]) * (h / 6.0));

            if !y.iter().all(|c| c.re.is_finite() && c.im.is_finite()) {
                return Err(Error::Diverged { step, time: step as f64 * h });
            }
            if step % stride == 0 {
                record(&to_state(&y), &mut rec);
            }
        }

        Ok(Trajectory {
            series: rec.finish(grid)?,
            final_state: to_state(&y),
            max_norm_error,
            max_energy_error,
        })
    }
}

#[derive(Default)]
struct Recorder {
    pe: Vec<f64>,
    n: Vec<f64>,
    energy: Vec<f64>,
    re_z: Vec<f64>,
    im_z: Vec<f64>,
    norm: Vec<f64>,
}

impl Recorder {
    fn with_capacity(len: usize) -> Self {
        Recorder {
            pe: Vec::with_capacity(len),
            n: Vec::with_capacity(len),
            energy: Vec::with_capacity(len),
            re_z: Vec::with_capacity(len),
            im_z: Vec::with_capacity(len),
            norm: Vec::with_capacity(len),
        }
    }

    fn push(&mut self, s: &MqcState, energy: f64, norm: f64) {
        self.pe.push(s.excited_population());
        self.n.push(s.occupancy());
        self.energy.push(energy);
        self.re_z.push(s.z.re);
        self.im_z.push(s.z.im);
        self.norm.push(norm);
    }

    fn finish(self, grid: TimeGrid) -> Result<TimeSeries> {
        TimeSeries::new(grid)
            .with_channel(channel::EXCITED, self.pe)?
            .with_channel(channel::OCCUPANCY, self.n)?
            .with_channel(channel::ENERGY, self.energy)?
            .with_channel(channel::RE_Z, self.re_z)?
            .with_channel(channel::IM_Z, self.im_z)?
            .with_channel(channel::NORM, self.norm)
    }
}

/// Integrates one trajectory with the given step, recording every
/// [`OUTPUT_SPACING`].
pub fn integrate_trajectory(initial: &MqcState, params: &ModelParams, dt: f64, t_final: f64) -> Result<Trajectory> {
    MqcIntegrator::new(*params, dt).integrate(initial, t_final)
}

/// Initial mode coordinate together with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerDraw {
    pub z: Complex64,
    pub index: u64,
    pub seed: u64,
}

impl SamplerDraw {
    pub fn state(&self, tls: InitialTls) -> MqcState {
        MqcState::with_tls(tls, self.z)
    }
}

/// Focused initialization: `z = √n0`, i.e. `p = 0`, `q ≥ 0`.
pub fn focused_initial(n0: f64, params: &ModelParams) -> Result<SamplerDraw> {
    focused_initial_with_phase(n0, 0.0, params)
}

/// Focused initialization with an explicit phase, `z = √n0 e^{iθ}`.
pub fn focused_initial_with_phase(n0: f64, phase: f64, params: &ModelParams) -> Result<SamplerDraw> {
    params.validate()?;
    if !(n0 >= 0.0 && n0.is_finite()) {
        return Err(Error::Domain(format!("focused occupancy must be non-negative, got {n0}")));
    }
    let z = if phase == 0.0 { Complex64::new(n0.sqrt(), 0.0) } else { Complex64::from_polar(n0.sqrt(), phase) };
    Ok(SamplerDraw { z, index: 0, seed: 0 })
}

/// Independent random stream for trajectory `index` of a run seeded with `seed`.
///
/// ChaCha is counter based: the stream id selects a disjoint sequence, so the
/// draw for a given index does not depend on which worker produces it.
pub fn trajectory_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws `(q, p)` from the vacuum Wigner distribution `∝ exp(−p²/Ω − Ω q²)`.
pub fn wigner_sample<R: Rng + ?Sized>(rng: &mut R, params: &ModelParams) -> Complex64 {
    let omega = params.omega_gamma;
    let q = Normal::new(0.0, (0.5 / omega).sqrt()).expect("positive width").sample(rng);
    let p = Normal::new(0.0, (0.5 * omega).sqrt()).expect("positive width").sample(rng);
    complex_coordinate(q, p, omega)
}

/// Wigner draw for trajectory `index`.
pub fn wigner_draw(seed: u64, index: u64, params: &ModelParams) -> SamplerDraw {
    let mut rng = trajectory_rng(seed, index);
    SamplerDraw { z: wigner_sample(&mut rng, params), index, seed }
}
