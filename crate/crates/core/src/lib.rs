//! Quantum Rabi model in three representations.
//!
//! * [`quantum`]: exact Jaynes–Cummings populations in the single-excitation
//!   subspace.
//! * [`mqc`] and [`ensemble`]: Ehrenfest trajectories of a TLS coupled
//!   self-consistently to a classical optical mode, with focused or Wigner
//!   initialization of the mode.
//! * [`duffing`]: the Duffing equation obeyed by the slow excited-state
//!   amplitude under the rotating-wave approximation, with a quadrature
//!   period oracle.
//!
//! [`spectral`] extracts dominant Rabi frequencies from population traces and
//! [`experiments`] drives the figure-level runs behind the `mqc-rabi` binary.
//!
//! Units: `ħ = 1`, energies and frequencies in units of `g`, times in `1/g`.

pub mod duffing;
pub mod ensemble;
pub mod error;
pub mod experiments;
pub mod io;
pub mod model;
pub mod mqc;
pub mod quantum;
pub mod rk4;
pub mod series;
pub mod spectral;

pub use error::{Error, Result};
pub use model::{EnsembleSpec, InitialTls, ModelParams, MqcState, Sampler};
pub use series::{TimeGrid, TimeSeries};
