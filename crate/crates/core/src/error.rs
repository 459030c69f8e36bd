use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("integration diverged at step {step} (t = {time})")]
    Diverged { step: usize, time: f64 },

    #[error("trajectory {index} (seed {seed}) diverged: {source}")]
    TrajectoryDiverged {
        index: u64,
        seed: u64,
        #[source]
        source: Box<Error>,
    },

    #[error("insufficient data: series covers gt = {covered}, need {required}")]
    InsufficientData { covered: f64, required: f64 },

    #[error("no oscillation: {0}")]
    NoOscillation(String),

    #[error("scan failed at n0 = {n0}: {source}")]
    Scan {
        n0: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code for the command-line driver.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Domain(_) | Error::Contract(_) => 2,
            Error::Io { .. } => 4,
            Error::Scan { source, .. } => source.exit_code(),
            Error::Diverged { .. }
            | Error::TrajectoryDiverged { .. }
            | Error::NoOscillation(_)
            | Error::InsufficientData { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
