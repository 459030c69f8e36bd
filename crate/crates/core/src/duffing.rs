//! Reduced dynamics of the slow excited-state amplitude.
//!
//! Under the rotating-wave approximation the phase-stripped amplitude `c̃_e`
//! of the mixed quantum–classical model obeys an undamped, unforced Duffing
//! equation
//!
//! ```text
//! c̈ = −a c + b c³,   b = 2g²,
//! a = (2 + n0) g²    (TLS starts excited, c(0) = 1, ċ(0) = 0)
//! a = (1 + n0) g²    (TLS starts in the ground state, c(0) = 0)
//! ```
//!
//! with conserved energy `ℰ = ċ²/2 + a c²/2 − b c⁴/4`. The amplitude stays
//! real for real initial data, so it is stored as `f64`. `P_e = c²`
//! oscillates at twice the amplitude frequency.
//!
//! For the ground-state start, the amplitude leaves zero with rate
//! `|ċ(0)| = g√n0`, set by the initial mode coordinate through
//! `ċ̃_e = −i g z̃ c̃_g`.

use crate::error::{Error, Result};
use crate::rk4::rk4_step;
use crate::series::{channel, TimeGrid, TimeSeries};

/// Largest internal step used by [`solve_duffing`].
pub const MAX_DT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StartMode {
    #[default]
    Excited,
    Ground,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DuffingParams {
    pub n0: f64,
    pub g: f64,
    pub mode: StartMode,
    /// Initial amplitude `c(0)`.
    pub c0: f64,
    /// Initial rate `ċ(0)`.
    pub v0: f64,
    /// Coefficient of the cubic term, `2g²` unless overridden.
    pub cubic: f64,
}

impl DuffingParams {
    /// TLS initially excited: `c0 = 1`, `v0 = 0`.
    pub fn excited(n0: f64, g: f64) -> Result<Self> {
        let p = DuffingParams { n0, g, mode: StartMode::Excited, c0: 1.0, v0: 0.0, cubic: 2.0 * g * g };
        p.validate()?;
        Ok(p)
    }

    /// TLS initially in its ground state: `c0 = 0`, `v0 = g√n0`.
    pub fn ground(n0: f64, g: f64) -> Result<Self> {
        let v0 = if n0 >= 0.0 { g * n0.sqrt() } else { f64::NAN };
        let p = DuffingParams { n0, g, mode: StartMode::Ground, c0: 0.0, v0, cubic: 2.0 * g * g };
        p.validate()?;
        Ok(p)
    }

    pub fn with_initial(mut self, c0: f64, v0: f64) -> Result<Self> {
        self.c0 = c0;
        self.v0 = v0;
        self.validate()?;
        Ok(self)
    }

    /// Replaces the cubic coefficient (zero gives a harmonic oscillator).
    pub fn with_cubic(mut self, cubic: f64) -> Self {
        self.cubic = cubic;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.n0 >= 0.0 && self.n0.is_finite()) {
            return Err(Error::Domain(format!("n0 must be non-negative, got {}", self.n0)));
        }
        if !(self.g > 0.0 && self.g.is_finite()) {
            return Err(Error::Domain(format!("g must be positive, got {}", self.g)));
        }
        if !(-1.0..=1.0).contains(&self.c0) {
            return Err(Error::Domain(format!("c0 must lie in [-1, 1], got {}", self.c0)));
        }
        if !self.v0.is_finite() {
            return Err(Error::Domain(format!("v0 must be finite, got {}", self.v0)));
        }
        Ok(())
    }

    /// Coefficient `a` of the linear restoring term.
    pub fn linear(&self) -> f64 {
        let g2 = self.g * self.g;
        match self.mode {
            StartMode::Excited => (2.0 + self.n0) * g2,
            StartMode::Ground => (1.0 + self.n0) * g2,
        }
    }

    pub fn potential(&self, c: f64) -> f64 {
        let c2 = c * c;
        0.5 * self.linear() * c2 - 0.25 * self.cubic * c2 * c2
    }

    /// `ℰ = v²/2 + V(c)`.
    pub fn energy(&self, c: f64, v: f64) -> f64 {
        0.5 * v * v + self.potential(c)
    }

    pub fn initial_energy(&self) -> f64 {
        self.energy(self.c0, self.v0)
    }
}

/// `c̈ = −a c + b c³`.
pub fn duffing_accel(c: f64, params: &DuffingParams) -> f64 {
    -params.linear() * c + params.cubic * c * c * c
}

/// Asymptotic population frequency `2g√(n0 + 1/2)`.
pub fn asymptotic_frequency(n0: f64, g: f64) -> Result<f64> {
    if !(n0 >= 0.0 && n0.is_finite()) {
        return Err(Error::Domain(format!("n0 must be non-negative, got {n0}")));
    }
    Ok(2.0 * g * (n0 + 0.5).sqrt())
}

fn step(y: &[f64; 2], h: f64, p: &DuffingParams) -> [f64; 2] {
    rk4_step(y, h, |y| [y[1], duffing_accel(y[0], p)])
}

/// Integrates the Duffing equation onto `grid` with RK4, using internal
/// steps no larger than [`MAX_DT`]. Channels: `P_e`, `c`, `v`.
pub fn solve_duffing(params: &DuffingParams, grid: TimeGrid) -> Result<TimeSeries> {
    params.validate()?;
    let substeps = (grid.step / MAX_DT - 1e-9).ceil().max(1.0) as usize;
    let h = grid.step / substeps as f64;

    let mut y = [params.c0, params.v0];
    let mut c = Vec::with_capacity(grid.len);
    let mut v = Vec::with_capacity(grid.len);
    c.push(y[0]);
    v.push(y[1]);
    for i in 1..grid.len {
        for k in 0..substeps {
            y = step(&y, h, params);
            if !(y[0].is_finite() && y[1].is_finite()) {
                let n = (i - 1) * substeps + k + 1;
                return Err(Error::Diverged { step: n, time: n as f64 * h });
            }
        }
        c.push(y[0]);
        v.push(y[1]);
    }
    let pe = c.iter().map(|c| c * c).collect();
    TimeSeries::new(grid)
        .with_channel(channel::EXCITED, pe)?
        .with_channel(channel::AMPLITUDE, c)?
        .with_channel(channel::RATE, v)
}

/// `(c(t), ċ(t))`, integrated with steps no larger than [`MAX_DT`] that land exactly on `t`.
pub fn duffing_state_at(params: &DuffingParams, t: f64) -> Result<(f64, f64)> {
    params.validate()?;
    let n = (t / MAX_DT).ceil().max(1.0) as usize;
    let h = t / n as f64;
    let mut y = [params.c0, params.v0];
    for k in 0..n {
        y = step(&y, h, params);
        if !(y[0].is_finite() && y[1].is_finite()) {
            return Err(Error::Diverged { step: k + 1, time: (k + 1) as f64 * h });
        }
    }
    Ok((y[0], y[1]))
}

/// Squared outer turning point `u = c_max²` of the bounded motion.
fn turning_point_sqr(p: &DuffingParams) -> Result<f64> {
    let a = p.linear();
    let b = p.cubic;
    let e = p.initial_energy();
    if b < 0.0 {
        return Err(Error::Domain(format!("cubic coefficient must be non-negative, got {b}")));
    }
    if e <= 0.0 {
        return Err(Error::NoOscillation(format!("zero energy (c0 = {}, v0 = {}): the amplitude stays at rest", p.c0, p.v0)));
    }
    if b > 0.0 && p.c0 * p.c0 >= a / b {
        return Err(Error::NoOscillation(format!("c0 = {} lies outside the potential well", p.c0)));
    }
    let disc = 0.25 * a * a - b * e;
    if disc <= 1e-14 * a * a {
        return Err(Error::NoOscillation(format!(
            "energy {e} reaches the barrier top {} (separatrix, n0 = {})",
            if b > 0.0 { a * a / (4.0 * b) } else { f64::INFINITY },
            p.n0
        )));
    }
    // smaller root of (b/4) u² − (a/2) u + ℰ = 0, in cancellation-free form
    Ok(2.0 * e / (0.5 * a + disc.sqrt()))
}

/// Amplitude period from `T = 2∮ dc / √(2(ℰ − V(c)))`.
///
/// With `c = c_max sin θ` the turning-point singularity cancels and
///
/// ```text
/// T = 4 ∫₀^{π/2} dθ / √(a − (b/2) c_max² (1 + sin²θ))
/// ```
///
/// which is evaluated by adaptive Simpson quadrature.
pub fn exact_period(params: &DuffingParams) -> Result<f64> {
    params.validate()?;
    let u = turning_point_sqr(params)?;
    let a = params.linear();
    let k = 0.5 * params.cubic * u;
    let f = |theta: f64| {
        let s = theta.sin();
        1.0 / (a - k * (1.0 + s * s)).sqrt()
    };
    Ok(4.0 * adaptive_simpson(&f, 0.0, std::f64::consts::FRAC_PI_2, 1e-13))
}

/// Frequency of `P_e = c²`, twice the amplitude frequency.
pub fn population_frequency(params: &DuffingParams) -> Result<f64> {
    Ok(4.0 * std::f64::consts::PI / exact_period(params)?)
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn recurse(f: &impl Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    let (fa, fm, fb) = (f(a), f(0.5 * (a + b)), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    recurse(f, a, b, fa, fm, fb, whole, tol, 40)
}

/// Amplitude period measured from upward zero crossings of `c` in a
/// [`solve_duffing`] series. Crossing times are refined on the cubic Hermite
/// interpolant built from `c` and `ċ`.
pub fn crossing_period(series: &TimeSeries) -> Result<f64> {
    let c = series.require(channel::AMPLITUDE)?;
    let v = series.require(channel::RATE)?;
    let h = series.step();
    let crossings: Vec<f64> = (0..c.len().saturating_sub(1))
        .filter(|&i| c[i] < 0.0 && c[i + 1] >= 0.0)
        .map(|i| i as f64 * h + hermite_root(c[i], c[i + 1], v[i] * h, v[i + 1] * h) * h)
        .collect();
    if crossings.len() < 2 {
        return Err(Error::NoOscillation(format!("found {} upward zero crossings", crossings.len())));
    }
    Ok((crossings[crossings.len() - 1] - crossings[0]) / (crossings.len() - 1) as f64)
}

/// Root in `[0, 1]` of the cubic Hermite interpolant with end values
/// `y0 < 0 <= y1` and scaled end slopes `m0`, `m1`.
fn hermite_root(y0: f64, y1: f64, m0: f64, m1: f64) -> f64 {
    let eval = |s: f64| {
        let s2 = s * s;
        let s3 = s2 * s;
        (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * m0 + (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * m1
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if eval(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
