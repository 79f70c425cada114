//! Hamiltonian matrix of a quartic potential in the oscillator basis.
//!
//! With `x = sqrt(g/2) (a + a†)` every power of `x` up to four has a closed
//! form matrix element, so `H_nk` is pentadiagonal. The reference oscillator
//! `m omega^2 x^2 / 2` is split off the potential, which is why the quadratic
//! coefficient enters as `A2' = a2 - m omega^2`.

use crate::basis::BasisSpec;
use crate::error::Result;
use crate::linalg::{jacobi_eigen, Matrix};
use crate::potential::QuarticPotential;

#[derive(Debug, Clone)]
pub struct HamiltonianMatrix {
    pub elements: Matrix,
    pub basis: BasisSpec,
    pub potential: QuarticPotential,
}

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Stationary energies, ascending.
    pub eigenvalues: Vec<f64>,
    /// Column `nu` holds stationary state `nu` in the oscillator basis.
    pub eigenvectors: Matrix,
}

/// Lower-triangle element `H[n][k]`, `n >= k`.
fn element(basis: &BasisSpec, u: &QuarticPotential, n: usize, k: usize) -> f64 {
    let g = basis.g();
    let a2p = u.a2 - basis.m * basis.omega * basis.omega;
    let nf = n as f64;
    let half_g = g / 2.0;
    match n - k {
        0 => {
            basis.level(n)
                + 3.0 * u.a4 * g * g / 16.0 * (2.0 * nf * nf + 2.0 * nf + 1.0)
                + a2p * g / 2.0 * (nf + 0.5)
                + u.a0
        }
        1 => u.a3 * half_g.powf(1.5) * nf * nf.sqrt() + u.a1 * half_g.sqrt() * nf.sqrt(),
        2 => {
            let r = (nf * (nf - 1.0)).sqrt();
            // <n|(a+a†)^4|n-2> = (4n - 2) sqrt(n(n-1))
            u.a4 * g * g / 16.0 * (4.0 * nf - 2.0) * r + a2p * g / 4.0 * r
        }
        3 => u.a3 / 3.0 * half_g.powf(1.5) * (nf * (nf - 1.0) * (nf - 2.0)).sqrt(),
        4 => u.a4 * g * g / 16.0 * (nf * (nf - 1.0) * (nf - 2.0) * (nf - 3.0)).sqrt(),
        _ => 0.0,
    }
}

impl HamiltonianMatrix {
    pub fn build(basis: BasisSpec, potential: QuarticPotential) -> Result<Self> {
        basis.validate()?;
        let size = basis.size();
        let mut elements = Matrix::zeros(size);
        for n in 0..size {
            for k in n.saturating_sub(4)..=n {
                let v = element(&basis, &potential, n, k);
                elements[(n, k)] = v;
                elements[(k, n)] = v;
            }
        }
        Ok(Self {
            elements,
            basis,
            potential,
        })
    }

    pub fn size(&self) -> usize {
        self.elements.dim()
    }

    pub fn eigensolve(&self) -> Result<EigenDecomposition> {
        let eig = jacobi_eigen(&self.elements)?;
        Ok(EigenDecomposition {
            eigenvalues: eig.values,
            eigenvectors: eig.vectors,
        })
    }
}

impl EigenDecomposition {
    /// `E_1 - E_0`.
    pub fn gap(&self) -> f64 {
        self.eigenvalues[1] - self.eigenvalues[0]
    }

    /// Tunneling period `2 pi hbar / (E_1 - E_0)`.
    pub fn tunneling_period(&self, hbar: f64) -> f64 {
        2.0 * std::f64::consts::PI * hbar / self.gap()
    }
}

/// Low-lying eigenvalues at two basis sizes, for checking convergence in `n_max`.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConvergenceCheck {
    pub n_small: usize,
    pub n_large: usize,
    pub small: Vec<f64>,
    pub large: Vec<f64>,
    pub max_abs_diff: f64,
}

pub fn convergence_check(
    basis: BasisSpec,
    potential: QuarticPotential,
    n_small: usize,
    count: usize,
) -> Result<ConvergenceCheck> {
    let small_basis = BasisSpec {
        n_max: n_small,
        ..basis
    };
    let small = HamiltonianMatrix::build(small_basis, potential)?.eigensolve()?;
    let large = HamiltonianMatrix::build(basis, potential)?.eigensolve()?;
    let count = count.min(small.eigenvalues.len()).min(large.eigenvalues.len());
    let small: Vec<f64> = small.eigenvalues[..count].to_vec();
    let large: Vec<f64> = large.eigenvalues[..count].to_vec();
    let max_abs_diff = small.iter().zip(&large).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(ConvergenceCheck {
        n_small,
        n_large: basis.n_max,
        small,
        large,
        max_abs_diff,
    })
}
