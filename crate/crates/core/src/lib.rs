//! Gaussian wavepacket dynamics in quartic potentials.
//!
//! Four propagators share one set of observables ([`ObservableRecord`]):
//!
//! * [`spectral`] — expansion in a truncated harmonic-oscillator basis,
//!   propagated exactly through the eigendecomposition of the Hamiltonian
//!   matrix;
//! * [`tdva`] — the variational single-Gaussian closure, with Heller's
//!   second-order truncation and the classical limit as reduced modes;
//! * [`tdva::classical`] — Newtonian orbits and turning points;
//! * [`grid`] — a Crank-Nicolson finite-difference propagator used as an
//!   independent oracle.
//!
//! [`runner`] drives all of them from an [`ExperimentConfig`].

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod basis;
pub mod config;
pub mod error;
pub mod grid;
pub mod hamiltonian;
pub mod linalg;
pub mod par;
pub mod potential;
pub mod quadrature;
pub mod runner;
pub mod spectral;
pub mod tdva;

pub use basis::BasisSpec;
pub use config::{ExperimentConfig, Method};
pub use error::{Error, Result};
pub use grid::{GridConfig, GridPropagator, GridState};
pub use hamiltonian::{EigenDecomposition, HamiltonianMatrix};
pub use par::Exec;
pub use potential::QuarticPotential;
pub use spectral::{GaussianParams, ObservableRecord, SpectralSolver, SpectralState};
pub use tdva::{ExtendedPhasePoint, Mode, Tdva, TdvaState};
