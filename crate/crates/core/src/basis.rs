//! Harmonic-oscillator eigenbasis.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

/// Largest quantum number accepted. Beyond this the Gaussian prefactor of
/// `phi_0` underflows inside the classically allowed region of `phi_n`, so
/// the normalized recurrence would silently return zeros.
pub const MAX_QUANTUM_NUMBER: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct BasisSpec {
    pub m: f64,
    pub omega: f64,
    pub hbar: f64,
    pub n_max: usize,
}

impl Default for BasisSpec {
    fn default() -> Self {
        Self {
            m: 1.0,
            omega: 1.0,
            hbar: 1.0,
            n_max: 30,
        }
    }
}

impl BasisSpec {
    pub fn new(m: f64, omega: f64, hbar: f64, n_max: usize) -> Result<Self> {
        let spec = Self { m, omega, hbar, n_max };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.m > 0.0 && self.omega > 0.0 && self.hbar > 0.0, || {
            format!(
                "basis needs m, omega, hbar > 0 (got {}, {}, {})",
                self.m, self.omega, self.hbar
            )
        })?;
        if self.n_max > MAX_QUANTUM_NUMBER {
            return Err(Error::BasisOverflow {
                n: self.n_max,
                max: MAX_QUANTUM_NUMBER,
            });
        }
        Ok(())
    }

    /// Number of basis functions, `n_max + 1`.
    pub fn size(&self) -> usize {
        self.n_max + 1
    }

    /// Squared oscillator length `hbar / (m omega)`.
    pub fn g(&self) -> f64 {
        self.hbar / (self.m * self.omega)
    }

    /// Unperturbed level `(n + 1/2) hbar omega`.
    pub fn level(&self, n: usize) -> f64 {
        (n as f64 + 0.5) * self.hbar * self.omega
    }

    /// Half-width of the region where the basis functions live: the outermost
    /// classical turning point plus six oscillator lengths.
    pub fn support_half_width(&self) -> f64 {
        let g = self.g();
        (2.0 * self.n_max as f64 * g).sqrt() + 6.0 * g.sqrt()
    }

    /// `phi_n(x)` for a single `n`.
    pub fn phi(&self, n: usize, x: f64) -> Result<f64> {
        if n > MAX_QUANTUM_NUMBER {
            return Err(Error::BasisOverflow {
                n,
                max: MAX_QUANTUM_NUMBER,
            });
        }
        let mut out = vec![0.0; n + 1];
        self.fill_phi(x, &mut out);
        Ok(out[n])
    }

    /// `phi_0(x) ..= phi_{n_max}(x)`.
    pub fn phi_all(&self, x: f64) -> Vec<f64> {
        let mut out = vec![0.0; self.size()];
        self.fill_phi(x, &mut out);
        out
    }

    /// Fill `out[n] = phi_n(x)` using the normalized three-term recurrence
    /// `phi_{n+1} = sqrt(2/(n+1)) y phi_n - sqrt(n/(n+1)) phi_{n-1}`.
    pub fn fill_phi(&self, x: f64, out: &mut [f64]) {
        if out.is_empty() {
            return;
        }
        let g = self.g();
        let y = x / g.sqrt();
        out[0] = (std::f64::consts::PI * g).powf(-0.25) * (-0.5 * y * y).exp();
        if out.len() > 1 {
            out[1] = std::f64::consts::SQRT_2 * y * out[0];
        }
        for n in 1..out.len().saturating_sub(1) {
            let nf = n as f64;
            out[n + 1] = (2.0 / (nf + 1.0)).sqrt() * y * out[n] - (nf / (nf + 1.0)).sqrt() * out[n - 1];
        }
    }
}

/// Physicists' Hermite polynomial `H_n(y)`.
pub fn hermite(n: usize, y: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 2.0 * y);
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let next = 2.0 * y * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}
