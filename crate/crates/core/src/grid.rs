//! Real-space Crank-Nicolson propagator, used as an independent check on the
//! spectral method.
//!
//! The kinetic term is the three-point Laplacian, the box has hard walls, and
//! the implicit half of each step is a Thomas solve whose factorization is
//! computed once since the matrix does not change in time.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};
use crate::par::{join, Exec};
use crate::potential::QuarticPotential;
use crate::spectral::{GaussianParams, ObservableRecord};

/// Amplitude next to the wall above which a run is aborted.
pub const BOUNDARY_ABORT: f64 = 1e-4;
/// Amplitude next to the wall above which a warning is logged.
pub const BOUNDARY_WARN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub x_lo: f64,
    pub x_hi: f64,
    pub n_points: usize,
    pub dt: f64,
    /// Also run with `h/2, dt/2` and combine the two series as `(4 fine - coarse)/3`,
    /// cancelling the leading second-order error.
    pub richardson: bool,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            x_lo: -12.0,
            x_hi: 12.0,
            n_points: 2048,
            dt: 0.002,
            richardson: false,
        }
    }
}

impl GridConfig {
    pub fn spacing(&self) -> f64 {
        (self.x_hi - self.x_lo) / (self.n_points - 1) as f64
    }

    /// Same box with spacing and time step halved.
    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            dt: self.dt / 2.0,
            ..*self
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        let h = self.spacing();
        (0..self.n_points).map(|i| self.x_lo + h * i as f64).collect()
    }

    /// Reject grids too coarse for the packet: `h <= sqrt(mu)/8` and
    /// `h <= pi hbar / (4 p_max)` with `p_max = |p| + 4 sqrt(<dp^2>)`.
    pub fn check_resolution(&self, g: &GaussianParams, hbar: f64) -> Result<()> {
        let h = self.spacing();
        ensure(h <= g.mu.sqrt() / 8.0, || {
            format!("grid spacing {h} does not resolve a packet of width sqrt({})", g.mu)
        })?;
        let p_max = g.p_mean.abs() + 4.0 * g.dp2(hbar).sqrt();
        ensure(h <= std::f64::consts::PI * hbar / (4.0 * p_max), || {
            format!("grid spacing {h} does not resolve momenta up to {p_max}")
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridState {
    pub psi: Vec<Complex64>,
    pub t: f64,
}

#[derive(Debug, Clone)]
pub struct GridPropagator {
    pub config: GridConfig,
    pub potential: QuarticPotential,
    pub m: f64,
    pub hbar: f64,
    xs: Vec<f64>,
    /// `hbar^2 / (2 m h^2)`.
    kappa: f64,
    /// Constant off-diagonal of `1 + i dt H / (2 hbar)`.
    beta: Complex64,
    /// Thomas factorization over the interior nodes.
    c_prime: Vec<Complex64>,
    denom: Vec<Complex64>,
}

impl GridPropagator {
    pub fn new(config: GridConfig, potential: QuarticPotential, m: f64, hbar: f64) -> Result<Self> {
        ensure(config.n_points >= 3, || {
            format!("grid needs at least 3 points (got {})", config.n_points)
        })?;
        ensure(config.x_hi > config.x_lo, || {
            format!("empty box [{}, {}]", config.x_lo, config.x_hi)
        })?;
        ensure(config.dt > 0.0 && config.dt.is_finite(), || {
            format!("grid step must be positive (got {})", config.dt)
        })?;
        ensure(m > 0.0 && hbar > 0.0, || format!("need m, hbar > 0 (got {m}, {hbar})"))?;
        let xs = config.nodes();
        let h = config.spacing();
        let kappa = hbar * hbar / (2.0 * m * h * h);
        let half = Complex64::new(0.0, config.dt / (2.0 * hbar));
        let beta = -half * kappa;
        let interior = config.n_points - 2;
        let mut c_prime = vec![Complex64::new(0.0, 0.0); interior];
        let mut denom = vec![Complex64::new(0.0, 0.0); interior];
        for j in 0..interior {
            let d = 1.0 + half * (2.0 * kappa + potential.value(xs[j + 1]));
            let den = if j == 0 { d } else { d - beta * c_prime[j - 1] };
            if den.norm() < 1e-300 {
                return Err(Error::TridiagonalBreakdown { row: j });
            }
            denom[j] = den;
            c_prime[j] = beta / den;
        }
        Ok(Self {
            config,
            potential,
            m,
            hbar,
            xs,
            kappa,
            beta,
            c_prime,
            denom,
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.xs
    }

    pub fn initial_gaussian(&self, g: &GaussianParams) -> GridState {
        let n = self.xs.len();
        let mut psi: Vec<Complex64> = self.xs.iter().map(|&x| g.amplitude(x, self.hbar)).collect();
        psi[0] = Complex64::new(0.0, 0.0);
        psi[n - 1] = Complex64::new(0.0, 0.0);
        GridState { psi, t: 0.0 }
    }

    fn apply_h(&self, psi: &[Complex64], j: usize) -> Complex64 {
        let n = psi.len();
        let left = if j == 0 { Complex64::new(0.0, 0.0) } else { psi[j - 1] };
        let right = if j + 1 == n {
            Complex64::new(0.0, 0.0)
        } else {
            psi[j + 1]
        };
        psi[j] * (2.0 * self.kappa + self.potential.value(self.xs[j])) - (left + right) * self.kappa
    }

    fn step(&self, psi: &mut [Complex64], rhs: &mut [Complex64]) {
        let n = psi.len();
        let half = Complex64::new(0.0, self.config.dt / (2.0 * self.hbar));
        for j in 1..n - 1 {
            rhs[j - 1] = psi[j] - half * self.apply_h(psi, j);
        }
        let interior = n - 2;
        // Forward sweep in place, then back substitution.
        rhs[0] /= self.denom[0];
        for j in 1..interior {
            rhs[j] = (rhs[j] - self.beta * rhs[j - 1]) / self.denom[j];
        }
        for j in (0..interior - 1).rev() {
            let next = rhs[j + 1];
            rhs[j] -= self.c_prime[j] * next;
        }
        psi[1..n - 1].copy_from_slice(&rhs[..interior]);
    }

    /// Largest amplitude on the nodes next to the walls.
    pub fn boundary_amplitude(&self, s: &GridState) -> f64 {
        let n = s.psi.len();
        s.psi[1].norm().max(s.psi[n - 2].norm())
    }

    fn check_boundary(&self, s: &GridState) -> Result<()> {
        let amp = self.boundary_amplitude(s);
        if amp > BOUNDARY_ABORT {
            return Err(Error::BoxTooSmall { t: s.t, amplitude: amp });
        }
        if amp > BOUNDARY_WARN {
            log::warn!("grid boundary amplitude {amp:e} at t = {}", s.t);
        }
        Ok(())
    }

    /// Advance by `t` using `ceil(t/dt)` steps of the configured length.
    pub fn propagate(&self, state: &GridState, t: f64) -> Result<GridState> {
        let steps = (t / self.config.dt - 1e-9).ceil().max(0.0) as usize;
        let mut psi = state.psi.clone();
        let mut rhs = vec![Complex64::new(0.0, 0.0); psi.len() - 2];
        for _ in 0..steps {
            self.step(&mut psi, &mut rhs);
        }
        let out = GridState {
            psi,
            t: state.t + steps as f64 * self.config.dt,
        };
        self.check_boundary(&out)?;
        Ok(out)
    }

    /// Observables every `dt_out` up to `t_end`, plus copies of the state at
    /// the requested snapshot times (rounded to the nearest output sample).
    pub fn time_series(
        &self,
        state0: &GridState,
        t_end: f64,
        dt_out: f64,
        snapshot_times: &[f64],
    ) -> Result<(Vec<ObservableRecord>, Vec<GridState>)> {
        ensure(dt_out > 0.0, || {
            format!("output interval must be positive (got {dt_out})")
        })?;
        let per_out = (dt_out / self.config.dt).round().max(1.0) as usize;
        if ((per_out as f64) * self.config.dt - dt_out).abs() > 1e-9 * dt_out {
            return Err(Error::InvalidParameter(format!(
                "output interval {dt_out} is not a multiple of the grid step {}",
                self.config.dt
            )));
        }
        let n_out = (t_end / dt_out + 1e-9).floor() as usize;
        let mut snaps_wanted: Vec<usize> = snapshot_times
            .iter()
            .map(|t| (t / dt_out).round() as usize)
            .filter(|&k| k <= n_out)
            .collect();
        snaps_wanted.sort_unstable();
        snaps_wanted.dedup();

        let mut records = Vec::with_capacity(n_out + 1);
        let mut snaps = Vec::new();
        let mut psi = state0.psi.clone();
        let mut rhs = vec![Complex64::new(0.0, 0.0); psi.len() - 2];
        for k in 0..=n_out {
            if k > 0 {
                for _ in 0..per_out {
                    self.step(&mut psi, &mut rhs);
                }
            }
            let s = GridState {
                psi: psi.clone(),
                t: state0.t + k as f64 * dt_out,
            };
            self.check_boundary(&s)?;
            records.push(self.observables(&s, state0));
            if snaps_wanted.binary_search(&k).is_ok() {
                snaps.push(s);
            }
        }
        Ok((records, snaps))
    }

    /// Trapezoid-rule moments; derivatives by central differences.
    pub fn observables(&self, s: &GridState, s0: &GridState) -> ObservableRecord {
        let h = self.config.spacing();
        let psi = &s.psi;
        let n = psi.len();
        let i = Complex64::i();
        let (mut norm, mut x1, mut x2, mut p1, mut p2, mut sym, mut energy) = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
        let mut overlap = Complex64::new(0.0, 0.0);
        // Endpoints are pinned to zero, so the trapezoid rule is a plain sum over interior nodes.
        for j in 1..n - 1 {
            let x = self.xs[j];
            let c = psi[j].conj();
            let d1 = (psi[j + 1] - psi[j - 1]) / (2.0 * h);
            let d2 = (psi[j + 1] - 2.0 * psi[j] + psi[j - 1]) / (h * h);
            let dens = psi[j].norm_sqr();
            norm += dens;
            x1 += x * dens;
            x2 += x * x * dens;
            p1 += (c * -i * self.hbar * d1).re;
            p2 += -(self.hbar * self.hbar) * (c * d2).re;
            sym += 2.0 * (c * x * -i * self.hbar * d1).re;
            energy += (c * self.apply_h(psi, j)).re;
            overlap += c * s0.psi[j];
        }
        let (norm, x1, x2, p1, p2, sym, energy) = (norm * h, x1 * h, x2 * h, p1 * h, p2 * h, sym * h, energy * h);
        ObservableRecord {
            t: s.t,
            x_mean: x1,
            p_mean: p1,
            dx2: x2 - x1 * x1,
            dp2: p2 - p1 * p1,
            sym: sym - 2.0 * x1 * p1,
            corr2: (overlap * h).norm_sqr(),
            norm,
            energy,
        }
    }
}

/// Observables of a Gaussian packet on `config` and on its refinement,
/// extrapolated to zero spacing and step.
#[allow(clippy::too_many_arguments)]
pub fn richardson_series(
    config: GridConfig,
    potential: QuarticPotential,
    m: f64,
    hbar: f64,
    g: &GaussianParams,
    t_end: f64,
    dt_out: f64,
    exec: Exec,
) -> Result<Vec<ObservableRecord>> {
    let series = |cfg: GridConfig| -> Result<Vec<ObservableRecord>> {
        let p = GridPropagator::new(cfg, potential, m, hbar)?;
        Ok(p.time_series(&p.initial_gaussian(g), t_end, dt_out, &[])?.0)
    };
    let (coarse, fine) = join(exec, || series(config), || series(config.refined()));
    let (coarse, fine) = (coarse?, fine?);
    let ex = |c: f64, f: f64| (4.0 * f - c) / 3.0;
    Ok(coarse
        .iter()
        .zip(&fine)
        .map(|(c, f)| ObservableRecord {
            t: f.t,
            x_mean: ex(c.x_mean, f.x_mean),
            p_mean: ex(c.p_mean, f.p_mean),
            dx2: ex(c.dx2, f.dx2),
            dp2: ex(c.dp2, f.dp2),
            sym: ex(c.sym, f.sym),
            corr2: ex(c.corr2, f.corr2),
            norm: ex(c.norm, f.norm),
            energy: ex(c.energy, f.energy),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ho(cfg: GridConfig) -> GridPropagator {
        GridPropagator::new(cfg, QuarticPotential::harmonic(1.0, 1.0), 1.0, 1.0).unwrap()
    }

    #[test]
    fn rejects_bad_configs() {
        let u = QuarticPotential::harmonic(1.0, 1.0);
        assert!(GridPropagator::new(
            GridConfig {
                n_points: 2,
                ..Default::default()
            },
            u,
            1.0,
            1.0
        )
        .is_err());
        assert!(GridPropagator::new(
            GridConfig {
                dt: 0.0,
                ..Default::default()
            },
            u,
            1.0,
            1.0
        )
        .is_err());
        assert!(GridPropagator::new(
            GridConfig {
                x_hi: -20.0,
                ..Default::default()
            },
            u,
            1.0,
            1.0
        )
        .is_err());
        let coarse = GridConfig {
            n_points: 64,
            ..Default::default()
        };
        assert!(coarse
            .check_resolution(&GaussianParams::new(0.0, 0.0, 0.1, 0.0).unwrap(), 1.0)
            .is_err());
        assert!(GridConfig::default()
            .check_resolution(&GaussianParams::new(0.0, 0.5, 0.1, 0.0).unwrap(), 1.0)
            .is_ok());
    }

    #[test]
    fn stationary_ground_state() {
        // The sampled Gaussian is an eigenvector of the discrete Laplacian only
        // up to O(h^2), so the box is resolved finely here.
        let p = ho(GridConfig {
            n_points: 8192,
            ..Default::default()
        });
        let g = GaussianParams::new(0.0, 0.0, 0.5, 0.0).unwrap();
        let s0 = p.initial_gaussian(&g);
        let s = p.propagate(&s0, 5.0).unwrap();
        let worst = s
            .psi
            .iter()
            .zip(&s0.psi)
            .map(|(a, b)| (a.norm() - b.norm()).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-6, "{worst}");
        let r0 = p.observables(&s0, &s0);
        let r = p.observables(&s, &s0);
        assert!((r.norm - r0.norm).abs() < 1e-8);
    }

    #[test]
    fn coherent_state_oscillates() {
        let p = ho(GridConfig {
            n_points: 4096,
            dt: 0.001,
            ..Default::default()
        });
        let s0 = p.initial_gaussian(&GaussianParams::new(-1.0, 0.0, 0.5, 0.0).unwrap());
        let (rec, snaps) = p.time_series(&s0, 10.0, 0.5, &[2.0, 7.5]).unwrap();
        assert_eq!(rec.len(), 21);
        assert_eq!(snaps.len(), 2);
        assert_abs_diff_eq!(snaps[1].t, 7.5, epsilon = 1e-12);
        for r in &rec {
            assert!((r.x_mean + r.t.cos()).abs() < 1e-4, "t={} x={}", r.t, r.x_mean);
            assert!((r.norm - rec[0].norm).abs() < 1e-8);
            assert!((r.energy - rec[0].energy).abs() < 1e-8);
        }
        assert_abs_diff_eq!(rec[0].energy, 1.0, epsilon = 1e-4);
        assert_abs_diff_eq!(rec[0].dp2, 0.5, epsilon = 1e-4);
    }

    #[test]
    fn second_order_convergence() {
        let g = GaussianParams::new(-1.0, 0.5, 0.3, 0.0).unwrap();
        let u = QuarticPotential::anharmonic(0.1);
        let x_at = |n_points: usize, dt: f64| {
            let cfg = GridConfig {
                x_lo: -10.0,
                x_hi: 10.0,
                n_points,
                dt,
                richardson: false,
            };
            let p = GridPropagator::new(cfg, u, 1.0, 1.0).unwrap();
            let s = p.propagate(&p.initial_gaussian(&g), 2.0).unwrap();
            p.observables(&s, &s).x_mean
        };
        let a = x_at(257, 0.02);
        let b = x_at(513, 0.01);
        let c = x_at(1025, 0.005);
        let ratio = (a - b).abs() / (b - c).abs();
        assert!(ratio > 3.0 && ratio < 5.0, "ratio {ratio}");
    }

    #[test]
    fn extrapolation_beats_both_inputs() {
        let g = GaussianParams::new(-1.0, 0.0, 0.5, 0.0).unwrap();
        let cfg = GridConfig {
            x_lo: -8.0,
            x_hi: 8.0,
            n_points: 257,
            dt: 0.02,
            richardson: true,
        };
        let u = QuarticPotential::harmonic(1.0, 1.0);
        let ex = richardson_series(cfg, u, 1.0, 1.0, &g, 6.0, 0.5, Exec::Parallel).unwrap();
        let p = GridPropagator::new(cfg.refined(), u, 1.0, 1.0).unwrap();
        let (fine, _) = p.time_series(&p.initial_gaussian(&g), 6.0, 0.5, &[]).unwrap();
        let err = |r: &[ObservableRecord]| r.iter().map(|r| (r.x_mean + r.t.cos()).abs()).fold(0.0, f64::max);
        assert!(err(&ex) < err(&fine) / 10.0, "{} vs {}", err(&ex), err(&fine));
    }

    #[test]
    fn box_too_small_is_detected() {
        let p = ho(GridConfig {
            x_lo: -3.0,
            x_hi: 3.0,
            n_points: 512,
            dt: 0.01,
            richardson: false,
        });
        let s0 = p.initial_gaussian(&GaussianParams::new(-1.0, 3.0, 0.5, 0.0).unwrap());
        assert!(matches!(p.propagate(&s0, 2.0), Err(Error::BoxTooSmall { .. })));
    }
}
