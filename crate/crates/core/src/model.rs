//! Physical parameters, state containers and unit conventions.
//!
//! Everything is expressed in units of the coupling `g` with `ħ = 1`: energies
//! and frequencies are in units of `g`, times in units of `1/g`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Optical frequency used throughout the resonant comparisons.
pub const DEFAULT_OMEGA: f64 = 50.0;

/// Focused occupancy that best reproduces the quantum Rabi frequency.
pub const FOCUSED_N0: f64 = 0.59;

/// Focused occupancy for the ground-state TLS protocol (one extra quantum).
pub const GROUND_START_N0: f64 = 1.59;

/// Spacing of recorded observables, in units of `1/g`.
pub const OUTPUT_SPACING: f64 = 0.01;

/// Physical constants of one Rabi-model instance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// TLS transition energy `Ω_e`.
    pub omega_e: f64,
    /// Optical mode frequency `Ω_γ`.
    pub omega_gamma: f64,
    /// Effective coupling `g`.
    pub g: f64,
    /// Transition dipole `μ`; only the product `μλ` enters the dynamics.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dipole: Option<f64>,
    /// Coupling strength `λ`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coupling_strength: Option<f64>,
}

impl ModelParams {
    pub fn new(omega_e: f64, omega_gamma: f64, g: f64) -> Result<Self> {
        let p = ModelParams { omega_e, omega_gamma, g, dipole: None, coupling_strength: None };
        p.validate()?;
        Ok(p)
    }

    /// `Ω_e = Ω_γ = omega`, `g = 1`.
    pub fn resonant(omega: f64) -> Result<Self> {
        Self::new(omega, omega, 1.0)
    }

    /// Builds the model from a dipole and coupling strength, deriving `g = μλ√(Ω_γ/2)`.
    pub fn from_dipole(omega_e: f64, omega_gamma: f64, dipole: f64, coupling_strength: f64) -> Result<Self> {
        let g = effective_coupling(dipole, coupling_strength, omega_gamma)?;
        let p = ModelParams {
            omega_e,
            omega_gamma,
            g,
            dipole: Some(dipole),
            coupling_strength: Some(coupling_strength),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("g", self.g), ("omega_e", self.omega_e), ("omega_gamma", self.omega_gamma)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::Domain(format!("{name} must be positive and finite, got {v}")));
            }
        }
        if let (Some(mu), Some(lambda)) = (self.dipole, self.coupling_strength) {
            let expected = effective_coupling(mu, lambda, self.omega_gamma)?;
            if ((self.g - expected) / expected).abs() > 1e-12 {
                return Err(Error::Domain(format!(
                    "g = {} is inconsistent with mu*lambda*sqrt(omega_gamma/2) = {expected}",
                    self.g
                )));
            }
        }
        Ok(())
    }

    pub fn is_resonant(&self) -> bool {
        self.omega_e == self.omega_gamma
    }

    /// Half the energy mismatch, `Δ = (Ω_e − Ω_γ)/2`.
    pub fn detuning(&self) -> f64 {
        0.5 * (self.omega_e - self.omega_gamma)
    }

    /// Default integration step: the largest step not exceeding `2π/(200 Ω_γ)`
    /// that divides [`OUTPUT_SPACING`] evenly.
    pub fn default_dt(&self) -> f64 {
        let max_dt = 2.0 * std::f64::consts::PI / (200.0 * self.omega_gamma);
        OUTPUT_SPACING / (OUTPUT_SPACING / max_dt).ceil()
    }
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            omega_e: DEFAULT_OMEGA,
            omega_gamma: DEFAULT_OMEGA,
            g: 1.0,
            dipole: None,
            coupling_strength: None,
        }
    }
}

/// `g = μ λ √(Ω/2)`.
pub fn effective_coupling(dipole: f64, coupling_strength: f64, omega: f64) -> Result<f64> {
    for (name, v) in [("dipole", dipole), ("coupling_strength", coupling_strength), ("omega", omega)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(dipole * coupling_strength * (omega / 2.0).sqrt())
}

/// Position and momentum of the classical mode from `z = √(Ω/2)(q + i p/Ω)`.
pub fn mode_coordinates(z: Complex64, omega: f64) -> (f64, f64) {
    ((2.0 / omega).sqrt() * z.re, (2.0 * omega).sqrt() * z.im)
}

/// Inverse of [`mode_coordinates`].
pub fn complex_coordinate(q: f64, p: f64, omega: f64) -> Complex64 {
    (omega / 2.0).sqrt() * Complex64::new(q, p / omega)
}

/// Classical occupancy from phase-space coordinates, `Ω q²/2 + p²/(2Ω)`.
pub fn occupancy(q: f64, p: f64, omega: f64) -> f64 {
    0.5 * omega * q * q + p * p / (2.0 * omega)
}

/// TLS amplitudes plus the complex classical mode coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MqcState {
    pub c_e: Complex64,
    pub c_g: Complex64,
    pub z: Complex64,
}

impl MqcState {
    pub fn new(c_e: Complex64, c_g: Complex64, z: Complex64) -> Self {
        MqcState { c_e, c_g, z }
    }

    pub fn with_tls(tls: InitialTls, z: Complex64) -> Self {
        let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        match tls {
            InitialTls::Excited => MqcState::new(one, zero, z),
            InitialTls::Ground => MqcState::new(zero, one, z),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c_e.norm_sqr() + self.c_g.norm_sqr()
    }

    pub fn excited_population(&self) -> f64 {
        self.c_e.norm_sqr()
    }

    /// Classical occupancy `n = z* z`.
    pub fn occupancy(&self) -> f64 {
        self.z.norm_sqr()
    }

    pub fn is_finite(&self) -> bool {
        [self.c_e, self.c_g, self.z].iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InitialTls {
    #[default]
    Excited,
    Ground,
}

/// How the classical mode coordinate is initialized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Sampler {
    /// Deterministic `z = √n0` on the positive real axis.
    Focused { n0: f64 },
    /// Gaussian draws from the vacuum Wigner distribution.
    Wigner,
}

/// Monte Carlo run description.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub sampler: Sampler,
    pub trajectories: u64,
    pub initial_tls: InitialTls,
    pub seed: u64,
    pub dt: f64,
    pub t_final: f64,
}

impl EnsembleSpec {
    pub fn validate(&self, params: &ModelParams) -> Result<()> {
        if self.trajectories == 0 {
            return Err(Error::Domain("trajectory_count must be at least 1".into()));
        }
        if let Sampler::Focused { n0 } = self.sampler {
            if !(n0 >= 0.0 && n0.is_finite()) {
                return Err(Error::Domain(format!("focused sampler needs n0 >= 0, got {n0}")));
            }
        }
        check_step(self.dt, self.t_final, params)
    }
}

/// At least 20 steps per optical period.
pub(crate) fn check_step(dt: f64, t_final: f64, params: &ModelParams) -> Result<()> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(Error::Domain(format!("dt must be positive, got {dt}")));
    }
    if dt * params.omega_gamma > 2.0 * std::f64::consts::PI / 20.0 {
        return Err(Error::Domain(format!(
            "dt = {dt} resolves fewer than 20 steps per optical period (omega_gamma = {})",
            params.omega_gamma
        )));
    }
    if !(t_final >= 0.0 && t_final.is_finite()) {
        return Err(Error::Domain(format!("t_final must be non-negative, got {t_final}")));
    }
    Ok(())
}
