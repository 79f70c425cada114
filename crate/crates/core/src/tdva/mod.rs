//! Time-dependent variational approximation: a single squeezed Gaussian whose
//! first two moments obey a closed set of four ODEs.
//!
//! For a quartic potential the moment sums terminate after the fourth
//! derivative, so the equations below are exact for the ansatz.

pub mod classical;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::potential::QuarticPotential;
use crate::spectral::{GaussianParams, ObservableRecord};

/// Smallest width tolerated before integration is aborted.
pub const MU_FLOOR: f64 = 1e-12;
pub const DEFAULT_DT: f64 = 0.001;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Full closure including the `U'''` force and `U''''` width terms.
    #[default]
    Full,
    /// Potential truncated at second order about the centroid.
    Heller,
    /// Newtonian centroid; width and correlation frozen.
    Classical,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Full => "tdva",
            Mode::Heller => "heller",
            Mode::Classical => "classical",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TdvaState {
    pub x_mean: f64,
    pub p_mean: f64,
    /// Position variance.
    pub mu: f64,
    /// `<dx dp + dp dx>`.
    pub alpha: f64,
    pub t: f64,
}

impl TdvaState {
    pub fn from_gaussian(g: &GaussianParams, t: f64) -> Self {
        Self {
            x_mean: g.x_mean,
            p_mean: g.p_mean,
            mu: g.mu,
            alpha: g.alpha,
            t,
        }
    }

    pub fn gaussian(&self) -> GaussianParams {
        GaussianParams {
            x_mean: self.x_mean,
            p_mean: self.p_mean,
            mu: self.mu,
            alpha: self.alpha,
        }
    }

    fn as_array(&self) -> [f64; 4] {
        [self.x_mean, self.p_mean, self.mu, self.alpha]
    }

    fn from_array(v: [f64; 4], t: f64) -> Self {
        Self {
            x_mean: v[0],
            p_mean: v[1],
            mu: v[2],
            alpha: v[3],
            t,
        }
    }

    pub fn to_extended(&self) -> Result<ExtendedPhasePoint> {
        ensure(self.mu > 0.0, || format!("width must be positive (got {})", self.mu))?;
        let rho = self.mu.sqrt();
        Ok(ExtendedPhasePoint {
            x_mean: self.x_mean,
            p_mean: self.p_mean,
            rho,
            pi: self.alpha / (2.0 * rho),
        })
    }
}

/// Canonical coordinates `(x, p, rho, pi)` with `mu = rho^2`, `alpha = 2 rho pi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtendedPhasePoint {
    pub x_mean: f64,
    pub p_mean: f64,
    pub rho: f64,
    pub pi: f64,
}

impl ExtendedPhasePoint {
    pub fn to_state(&self, t: f64) -> TdvaState {
        TdvaState {
            x_mean: self.x_mean,
            p_mean: self.p_mean,
            mu: self.rho * self.rho,
            alpha: 2.0 * self.rho * self.pi,
            t,
        }
    }

    fn as_array(&self) -> [f64; 4] {
        [self.x_mean, self.p_mean, self.rho, self.pi]
    }

    fn from_array(v: [f64; 4]) -> Self {
        Self {
            x_mean: v[0],
            p_mean: v[1],
            rho: v[2],
            pi: v[3],
        }
    }
}

/// The variational equations for one potential, mass and `hbar`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tdva {
    pub potential: QuarticPotential,
    pub m: f64,
    pub hbar: f64,
}

fn rk4_step(y: [f64; 4], h: f64, f: impl Fn(&[f64; 4]) -> Result<[f64; 4]>) -> Result<[f64; 4]> {
    let add = |a: &[f64; 4], k: &[f64; 4], s: f64| [a[0] + s * k[0], a[1] + s * k[1], a[2] + s * k[2], a[3] + s * k[3]];
    let k1 = f(&y)?;
    let k2 = f(&add(&y, &k1, h / 2.0))?;
    let k3 = f(&add(&y, &k2, h / 2.0))?;
    let k4 = f(&add(&y, &k3, h))?;
    let mut out = y;
    for i in 0..4 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    Ok(out)
}

/// `(steps per output, adjusted dt)` so that outputs land exactly on multiples of `dt_out`.
fn substeps(dt: f64, dt_out: f64) -> (usize, f64) {
    let k = (dt_out / dt - 1e-9).ceil().max(1.0) as usize;
    (k, dt_out / k as f64)
}

impl Tdva {
    pub fn new(potential: QuarticPotential, m: f64, hbar: f64) -> Result<Self> {
        ensure(m > 0.0 && hbar > 0.0, || format!("need m, hbar > 0 (got {m}, {hbar})"))?;
        Ok(Self { potential, m, hbar })
    }

    /// Time derivative `(dx, dp, dmu, dalpha)`.
    pub fn rhs(&self, s: &TdvaState, mode: Mode) -> Result<[f64; 4]> {
        self.rhs_array(&s.as_array(), s.t, mode)
    }

    fn rhs_array(&self, v: &[f64; 4], t: f64, mode: Mode) -> Result<[f64; 4]> {
        let [x, p, mu, alpha] = *v;
        let [_, d1, d2, d3, d4] = self.potential.derivatives(x);
        let m = self.m;
        if mode == Mode::Classical {
            return Ok([p / m, -d1, 0.0, 0.0]);
        }
        if !(mu > MU_FLOOR) {
            return Err(Error::WidthCollapse { t, mu });
        }
        let spread = (self.hbar * self.hbar + alpha * alpha) / (2.0 * m * mu);
        Ok(match mode {
            Mode::Full => [
                p / m,
                -d1 - d3 * mu / 2.0,
                alpha / m,
                spread - 2.0 * d2 * mu - d4 * mu * mu,
            ],
            Mode::Heller => [p / m, -d1, alpha / m, spread - 2.0 * d2 * mu],
            Mode::Classical => unreachable!(),
        })
    }

    /// Hamilton's equations of the effective Hamiltonian in `(x, p, rho, pi)`.
    pub fn rhs_extended(&self, e: &ExtendedPhasePoint) -> Result<[f64; 4]> {
        self.rhs_extended_array(&e.as_array(), f64::NAN)
    }

    fn rhs_extended_array(&self, v: &[f64; 4], t: f64) -> Result<[f64; 4]> {
        let [x, p, rho, pi] = *v;
        if !(rho * rho > MU_FLOOR) {
            return Err(Error::WidthCollapse { t, mu: rho * rho });
        }
        let [_, d1, d2, d3, d4] = self.potential.derivatives(x);
        let m = self.m;
        let r2 = rho * rho;
        Ok([
            p / m,
            -d1 - d3 * r2 / 2.0,
            pi / m,
            self.hbar * self.hbar / (4.0 * m * r2 * rho) - d2 * rho - d4 * r2 * rho / 2.0,
        ])
    }

    /// `H_eff = p^2/2m + pi^2/2m + hbar^2/(8 m rho^2) + U + U'' rho^2/2 + U'''' rho^4/8`.
    pub fn effective_hamiltonian(&self, e: &ExtendedPhasePoint) -> Result<f64> {
        ensure(e.rho > 0.0, || format!("rho must be positive (got {})", e.rho))?;
        let [u, _, d2, _, d4] = self.potential.derivatives(e.x_mean);
        let m = self.m;
        let r2 = e.rho * e.rho;
        Ok(e.p_mean * e.p_mean / (2.0 * m)
            + e.pi * e.pi / (2.0 * m)
            + self.hbar * self.hbar / (8.0 * m * r2)
            + u
            + d2 * r2 / 2.0
            + d4 * r2 * r2 / 8.0)
    }

    /// Fixed-step RK4 from `state0` to `t_end`, returning the samples at
    /// `state0.t + k dt_out`. `dt` is shrunk if needed so that an integer
    /// number of steps fits between samples.
    pub fn integrate(
        &self,
        state0: &TdvaState,
        t_end: f64,
        dt: f64,
        dt_out: f64,
        mode: Mode,
    ) -> Result<Vec<TdvaState>> {
        ensure(dt > 0.0 && dt.is_finite(), || {
            format!("TDVA step must be positive (got {dt})")
        })?;
        ensure(dt_out > 0.0, || {
            format!("output interval must be positive (got {dt_out})")
        })?;
        if mode != Mode::Classical {
            ensure(state0.mu > 0.0, || {
                format!("initial width must be positive (got {})", state0.mu)
            })?;
        }
        let (k, h) = substeps(dt, dt_out);
        let n_out = ((t_end - state0.t) / dt_out + 1e-9).floor().max(0.0) as usize;
        let mut out = Vec::with_capacity(n_out + 1);
        out.push(*state0);
        let mut y = state0.as_array();
        for j in 0..n_out {
            for i in 0..k {
                let t = state0.t + j as f64 * dt_out + i as f64 * h;
                y = rk4_step(y, h, |v| self.rhs_array(v, t, mode))?;
            }
            out.push(TdvaState::from_array(y, state0.t + (j + 1) as f64 * dt_out));
        }
        Ok(out)
    }

    /// Same trajectory integrated in the canonical `(x, p, rho, pi)` variables.
    pub fn integrate_extended(&self, state0: &TdvaState, t_end: f64, dt: f64, dt_out: f64) -> Result<Vec<TdvaState>> {
        ensure(dt > 0.0 && dt.is_finite(), || {
            format!("TDVA step must be positive (got {dt})")
        })?;
        ensure(dt_out > 0.0, || {
            format!("output interval must be positive (got {dt_out})")
        })?;
        let (k, h) = substeps(dt, dt_out);
        let n_out = ((t_end - state0.t) / dt_out + 1e-9).floor().max(0.0) as usize;
        let mut out = Vec::with_capacity(n_out + 1);
        out.push(*state0);
        let mut y = state0.to_extended()?.as_array();
        for j in 0..n_out {
            for i in 0..k {
                let t = state0.t + j as f64 * dt_out + i as f64 * h;
                y = rk4_step(y, h, |v| self.rhs_extended_array(v, t))?;
            }
            out.push(ExtendedPhasePoint::from_array(y).to_state(state0.t + (j + 1) as f64 * dt_out));
        }
        Ok(out)
    }

    /// Observables of the Gaussian ansatz; `energy` is `H_eff`, or the
    /// Newtonian energy in classical mode.
    pub fn observables(&self, s: &TdvaState, s0: &TdvaState, mode: Mode) -> ObservableRecord {
        let g = s.gaussian();
        let energy = match mode {
            Mode::Classical => s.p_mean * s.p_mean / (2.0 * self.m) + self.potential.value(s.x_mean),
            _ => s
                .to_extended()
                .and_then(|e| self.effective_hamiltonian(&e))
                .unwrap_or(f64::NAN),
        };
        ObservableRecord {
            t: s.t,
            x_mean: s.x_mean,
            p_mean: s.p_mean,
            dx2: g.dx2(),
            dp2: g.dp2(self.hbar),
            sym: s.alpha,
            corr2: g.overlap(&s0.gaussian(), self.hbar).norm_sqr(),
            norm: 1.0,
            energy,
        }
    }
}

pub fn gaussian_wavefunction(s: &TdvaState, hbar: f64, xs: &[f64]) -> Vec<Complex64> {
    let g = s.gaussian();
    xs.iter().map(|&x| g.amplitude(x, hbar)).collect()
}
