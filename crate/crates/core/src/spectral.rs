//! Spectral method: expand the wavefunction in the oscillator basis and evolve
//! the coefficients exactly through the eigendecomposition of `H`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::basis::BasisSpec;
use crate::error::{ensure, Result};
use crate::hamiltonian::{EigenDecomposition, HamiltonianMatrix};
use crate::par::{map_range, map_slice, Exec};
use crate::potential::QuarticPotential;

/// Squeezed coherent-state Gaussian
/// `(2 pi mu)^(-1/4) exp[-(1 - i alpha/hbar)(x - x_mean)^2 / (4 mu) + i p_mean (x - x_mean)/hbar]`.
///
/// `mu` is the position variance and `alpha` the symmetrized covariance
/// `<dx dp + dp dx>`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianParams {
    pub x_mean: f64,
    pub p_mean: f64,
    pub mu: f64,
    pub alpha: f64,
}

impl GaussianParams {
    pub fn new(x_mean: f64, p_mean: f64, mu: f64, alpha: f64) -> Result<Self> {
        ensure(mu > 0.0, || format!("Gaussian width mu must be positive (got {mu})"))?;
        Ok(Self {
            x_mean,
            p_mean,
            mu,
            alpha,
        })
    }

    pub fn amplitude(&self, x: f64, hbar: f64) -> Complex64 {
        let d = x - self.x_mean;
        let norm = (2.0 * std::f64::consts::PI * self.mu).powf(-0.25);
        let re = -d * d / (4.0 * self.mu);
        let im = self.alpha / hbar * d * d / (4.0 * self.mu) + self.p_mean * d / hbar;
        norm * Complex64::new(re, im).exp()
    }

    pub fn dx2(&self) -> f64 {
        self.mu
    }

    pub fn dp2(&self, hbar: f64) -> f64 {
        (hbar * hbar + self.alpha * self.alpha) / (4.0 * self.mu)
    }

    /// Closed-form overlap `<self|other>` of two Gaussians of this family.
    pub fn overlap(&self, other: &GaussianParams, hbar: f64) -> Complex64 {
        let a1 = Complex64::new(1.0, -self.alpha / hbar) / (4.0 * self.mu);
        let a2 = Complex64::new(1.0, -other.alpha / hbar) / (4.0 * other.mu);
        let a1c = a1.conj();
        let (x1, x2) = (self.x_mean, other.x_mean);
        let (p1, p2) = (self.p_mean, other.p_mean);
        // Integrand exp(-A x^2 + B x + C).
        let a = a1c + a2;
        let b = 2.0 * a1c * x1 + 2.0 * a2 * x2 + Complex64::i() * (p2 - p1) / hbar;
        let c = -a1c * x1 * x1 - a2 * x2 * x2 + Complex64::i() * (p1 * x1 - p2 * x2) / hbar;
        let norm =
            (2.0 * std::f64::consts::PI * self.mu).powf(-0.25) * (2.0 * std::f64::consts::PI * other.mu).powf(-0.25);
        norm * (std::f64::consts::PI / a).sqrt() * (b * b / (4.0 * a) + c).exp()
    }
}

/// Expansion coefficients `c_n(t)` over the truncated oscillator basis.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralState {
    pub coeffs: Vec<Complex64>,
    pub t: f64,
}

impl SpectralState {
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum()
    }
}

/// One time sample of the observables shared by every propagation method.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObservableRecord {
    pub t: f64,
    pub x_mean: f64,
    pub p_mean: f64,
    pub dx2: f64,
    pub dp2: f64,
    /// `<dx dp + dp dx>`.
    pub sym: f64,
    /// `|C(t)|^2`.
    pub corr2: f64,
    pub norm: f64,
    pub energy: f64,
}

impl ObservableRecord {
    pub fn uncertainty_product(&self) -> f64 {
        self.dx2 * self.dp2
    }

    /// `dx2 dp2 - (hbar^2 + sym^2)/4`; identically zero for a squeezed Gaussian.
    pub fn gaussian_identity_violation(&self, hbar: f64) -> f64 {
        self.uncertainty_product() - (hbar * hbar + self.sym * self.sym) / 4.0
    }
}

/// Integration window for x-space quadrature around a Gaussian.
fn quadrature_window(g: &GaussianParams, basis: &BasisSpec) -> (f64, f64) {
    let w = (12.0 * g.mu.sqrt()).max(12.0 * basis.g().sqrt());
    let s = basis.support_half_width();
    ((g.x_mean - w).min(-s), (g.x_mean + w).max(s))
}

fn project_on_grid(
    g: &GaussianParams,
    basis: &BasisSpec,
    a: f64,
    b: f64,
    intervals: usize,
    exec: Exec,
) -> Vec<Complex64> {
    let h = (b - a) / intervals as f64;
    let size = basis.size();
    const CHUNK: usize = 512;
    let chunks = (intervals + 1).div_ceil(CHUNK);
    let partial = map_range(exec, chunks, |ci| {
        let mut acc = vec![Complex64::new(0.0, 0.0); size];
        let mut phi = vec![0.0; size];
        for i in ci * CHUNK..((ci + 1) * CHUNK).min(intervals + 1) {
            let x = a + h * i as f64;
            let w = if i == 0 || i == intervals {
                1.0
            } else if i % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let psi = g.amplitude(x, basis.hbar) * (w * h / 3.0);
            basis.fill_phi(x, &mut phi);
            for (c, p) in acc.iter_mut().zip(&phi) {
                *c += psi * *p;
            }
        }
        acc
    });
    let mut out = vec![Complex64::new(0.0, 0.0); size];
    for part in partial {
        for (o, p) in out.iter_mut().zip(part) {
            *o += p;
        }
    }
    out
}

/// Project an initial Gaussian onto the basis, `c_n(0) = ∫ phi_n Psi_G dx`.
///
/// The Simpson step is halved until the coefficients move by less than 1e-9.
pub fn project_initial(g: &GaussianParams, basis: &BasisSpec) -> Result<SpectralState> {
    project_initial_with(g, basis, Exec::default())
}

pub fn project_initial_with(g: &GaussianParams, basis: &BasisSpec, exec: Exec) -> Result<SpectralState> {
    ensure(g.mu > 0.0, || {
        format!("Gaussian width mu must be positive (got {})", g.mu)
    })?;
    basis.validate()?;
    let (a, b) = quadrature_window(g, basis);
    let mut intervals = 1024;
    let mut coeffs = project_on_grid(g, basis, a, b, intervals, exec);
    while intervals < 1 << 22 {
        intervals *= 2;
        let finer = project_on_grid(g, basis, a, b, intervals, exec);
        let change = finer
            .iter()
            .zip(&coeffs)
            .map(|(u, v)| (u - v).norm())
            .fold(0.0, f64::max);
        coeffs = finer;
        if change < 1e-9 {
            break;
        }
    }
    let state = SpectralState { coeffs, t: 0.0 };
    let norm = state.norm();
    if norm < 0.999 {
        log::warn!(
            "initial Gaussian poorly represented by {} basis functions: norm = {norm}",
            basis.size()
        );
    }
    Ok(state)
}

/// Exact propagator `c(t) = V exp(-i E t / hbar) V^T c(0)` for one initial state.
#[derive(Debug, Clone)]
pub struct EigenPropagator<'a> {
    eig: &'a EigenDecomposition,
    hbar: f64,
    /// `V^T c(0)`.
    amplitudes: Vec<Complex64>,
    t0: f64,
}

impl<'a> EigenPropagator<'a> {
    pub fn new(eig: &'a EigenDecomposition, hbar: f64, state0: &SpectralState) -> Self {
        let v = &eig.eigenvectors;
        let n = v.dim();
        assert_eq!(state0.coeffs.len(), n, "state and eigendecomposition sizes differ");
        let amplitudes = (0..n)
            .map(|nu| (0..n).map(|k| v[(k, nu)] * state0.coeffs[k]).sum())
            .collect();
        Self {
            eig,
            hbar,
            amplitudes,
            t0: state0.t,
        }
    }

    /// Populations of the stationary states.
    pub fn stationary_weights(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn at(&self, t: f64) -> SpectralState {
        let v = &self.eig.eigenvectors;
        let n = v.dim();
        let dt = t - self.t0;
        let phased: Vec<Complex64> = self
            .amplitudes
            .iter()
            .zip(&self.eig.eigenvalues)
            .map(|(a, e)| a * Complex64::from_polar(1.0, -e * dt / self.hbar))
            .collect();
        let coeffs = (0..n)
            .map(|k| v.row(k).iter().zip(&phased).map(|(vk, p)| p * *vk).sum())
            .collect();
        SpectralState { coeffs, t }
    }
}

/// Propagate `state0` by the time `t` through the eigendecomposition.
pub fn propagate(state0: &SpectralState, eig: &EigenDecomposition, hbar: f64, t: f64) -> SpectralState {
    let mut s = EigenPropagator::new(eig, hbar, state0).at(state0.t + t);
    s.t = state0.t + t;
    s
}

fn apply_h(h: &HamiltonianMatrix, c: &[Complex64], scale: Complex64) -> Vec<Complex64> {
    let n = c.len();
    (0..n)
        .map(|i| {
            let lo = i.saturating_sub(4);
            let hi = (i + 4).min(n - 1);
            let row = h.elements.row(i);
            let mut acc = Complex64::new(0.0, 0.0);
            for k in lo..=hi {
                acc += c[k] * row[k];
            }
            acc * scale
        })
        .collect()
}

/// Classic fourth-order Runge-Kutta integration of `i hbar dc/dt = H c`.
///
/// The step is shrunk so that an integer number of steps lands exactly on `t`.
pub fn propagate_rk4(state0: &SpectralState, h: &HamiltonianMatrix, t: f64, dt: f64) -> Result<SpectralState> {
    ensure(dt > 0.0 && dt.is_finite(), || {
        format!("RK4 step must be positive (got {dt})")
    })?;
    let steps = (t.abs() / dt).ceil().max(if t == 0.0 { 0.0 } else { 1.0 }) as usize;
    let mut c = state0.coeffs.clone();
    let norm0 = state0.norm();
    if steps > 0 {
        let step = t / steps as f64;
        let scale = Complex64::new(0.0, -1.0 / h.basis.hbar);
        let axpy = |c: &[Complex64], k: &[Complex64], f: f64| -> Vec<Complex64> {
            c.iter().zip(k).map(|(a, b)| a + b * f).collect()
        };
        for _ in 0..steps {
            let k1 = apply_h(h, &c, scale);
            let k2 = apply_h(h, &axpy(&c, &k1, step / 2.0), scale);
            let k3 = apply_h(h, &axpy(&c, &k2, step / 2.0), scale);
            let k4 = apply_h(h, &axpy(&c, &k3, step), scale);
            for i in 0..c.len() {
                c[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (step / 6.0);
            }
        }
    }
    let out = SpectralState {
        coeffs: c,
        t: state0.t + t,
    };
    let drift = (out.norm() - norm0).abs();
    if drift > 1e-6 {
        log::warn!("RK4 norm drift {drift:e} after t = {t} with dt = {dt}");
    }
    Ok(out)
}

/// `Psi(x) = sum_n c_n phi_n(x)` at each requested position.
pub fn reconstruct(state: &SpectralState, basis: &BasisSpec, xs: &[f64]) -> Vec<Complex64> {
    reconstruct_with(state, basis, xs, Exec::default())
}

pub fn reconstruct_with(state: &SpectralState, basis: &BasisSpec, xs: &[f64], exec: Exec) -> Vec<Complex64> {
    let basis = BasisSpec {
        n_max: state.coeffs.len() - 1,
        ..*basis
    };
    map_slice(exec, xs, |&x| {
        basis.phi_all(x).iter().zip(&state.coeffs).map(|(p, c)| c * *p).sum()
    })
}

/// Raw moments from the ladder-operator sums; centered moments follow.
pub fn observables(
    state: &SpectralState,
    state0: &SpectralState,
    basis: &BasisSpec,
    h: &HamiltonianMatrix,
) -> ObservableRecord {
    let c = &state.coeffs;
    let n = c.len();
    assert_eq!(n, state0.coeffs.len(), "states must share a basis size");
    let g = basis.g();
    let hbar = basis.hbar;

    // S1 = sum sqrt(n+1) c*_{n+1} c_n,  S2 = sum sqrt((n+1)(n+2)) c*_{n+2} c_n
    let mut s1 = Complex64::new(0.0, 0.0);
    let mut s2 = Complex64::new(0.0, 0.0);
    let mut diag = 0.0;
    for k in 0..n {
        let kf = k as f64;
        diag += (2.0 * kf + 1.0) * c[k].norm_sqr();
        if k + 1 < n {
            s1 += (kf + 1.0).sqrt() * c[k + 1].conj() * c[k];
        }
        if k + 2 < n {
            s2 += ((kf + 1.0) * (kf + 2.0)).sqrt() * c[k + 2].conj() * c[k];
        }
    }
    let x_mean = (g / 2.0).sqrt() * 2.0 * s1.re;
    let p_mean = -2.0 * hbar / (2.0 * g).sqrt() * s1.im;
    let x2 = g / 2.0 * (2.0 * s2.re + diag);
    let p2 = -hbar * hbar / (2.0 * g) * (2.0 * s2.re - diag);
    let xp_px = -2.0 * hbar * s2.im;

    let overlap: Complex64 = c.iter().zip(&state0.coeffs).map(|(a, b)| a.conj() * b).sum();
    let hc = apply_h(h, c, Complex64::new(1.0, 0.0));
    let energy: f64 = c.iter().zip(&hc).map(|(a, b)| (a.conj() * b).re).sum();

    ObservableRecord {
        t: state.t,
        x_mean,
        p_mean,
        dx2: x2 - x_mean * x_mean,
        dp2: p2 - p_mean * p_mean,
        sym: xp_px - 2.0 * x_mean * p_mean,
        corr2: overlap.norm_sqr(),
        norm: state.norm(),
        energy,
    }
}

/// Hamiltonian, its eigendecomposition and the basis, bundled for repeated runs.
#[derive(Debug, Clone)]
pub struct SpectralSolver {
    pub basis: BasisSpec,
    pub hamiltonian: HamiltonianMatrix,
    pub eigen: EigenDecomposition,
}

impl SpectralSolver {
    pub fn new(basis: BasisSpec, potential: QuarticPotential) -> Result<Self> {
        let hamiltonian = HamiltonianMatrix::build(basis, potential)?;
        let eigen = hamiltonian.eigensolve()?;
        Ok(Self {
            basis,
            hamiltonian,
            eigen,
        })
    }

    pub fn project(&self, g: &GaussianParams) -> Result<SpectralState> {
        project_initial(g, &self.basis)
    }

    pub fn propagator<'a>(&'a self, state0: &SpectralState) -> EigenPropagator<'a> {
        EigenPropagator::new(&self.eigen, self.basis.hbar, state0)
    }

    /// Observables at each of `times`.
    pub fn time_series(&self, state0: &SpectralState, times: &[f64], exec: Exec) -> Vec<ObservableRecord> {
        let prop = self.propagator(state0);
        map_slice(exec, times, |&t| {
            observables(&prop.at(t), state0, &self.basis, &self.hamiltonian)
        })
    }
}

/// `t0, t0 + dt, ...` strictly below `t_end` (or up to it when `inclusive`).
pub fn sample_times(t_end: f64, dt: f64, inclusive: bool) -> Vec<f64> {
    let n = (t_end / dt + 1e-9).floor() as usize;
    let mut ts: Vec<f64> = (0..=n).map(|i| i as f64 * dt).collect();
    if !inclusive {
        ts.retain(|&t| t < t_end - 1e-12 * t_end.abs().max(1.0));
    }
    ts
}
