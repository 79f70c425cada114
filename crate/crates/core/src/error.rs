use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("derivative order {0} out of range 0..=4")]
    DerivativeOrder(usize),

    #[error("basis index {n} exceeds the supported maximum {max}")]
    BasisOverflow { n: usize, max: usize },

    #[error("Jacobi diagonalization did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("Gaussian width collapsed at t = {t}: mu = {mu:e}")]
    WidthCollapse { t: f64, mu: f64 },

    #[error("wavefunction reached the box edge at t = {t}: |psi| = {amplitude:e}")]
    BoxTooSmall { t: f64, amplitude: f64 },

    #[error("tridiagonal solve broke down at row {row}")]
    TridiagonalBreakdown { row: usize },

    #[error("no real turning point for energy {energy}")]
    NoTurningPoint { energy: f64 },

    #[error("time grids do not match: {0}")]
    GridMismatch(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("csv error: {0}")]
    Csv(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by bad input rather than by a numerical failure.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_) | Error::DerivativeOrder(_) | Error::Config(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}
