//! Experiment configuration (TOML) and the built-in figure presets.
//!
//! ```toml
//! name = "fig5"
//!
//! [potential]
//! sdw = { m = 1.0, omega = 1.0, x_s = 2.8284271247461903 }
//! # or: ao = { b = 0.1 }   ho = {}   a4 = .. a3 = .. a2 = .. a1 = .. a0 = ..
//!
//! [basis]
//! m = 1.0
//! omega = 1.0
//! hbar = 1.0
//! n_max = 30
//!
//! [initial]
//! x0 = -2.8284271247461903
//! p0 = 0.0
//! mu0 = 0.1
//! alpha0 = 0.0
//!
//! [run]
//! methods = ["sm", "tdva"]
//! t_end = 1000.0
//! dt_out = 1.0
//! ```
//!
//! Every other key has a default; see the field docs below.

use serde::{Deserialize, Serialize};

use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::grid::GridConfig;
use crate::par::Exec;
use crate::potential::QuarticPotential;
use crate::spectral::GaussianParams;
use crate::tdva::Mode;

const SQRT8: f64 = 2.0 * std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Sm,
    Tdva,
    Heller,
    Classical,
    Grid,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Sm,
        Method::Tdva,
        Method::Heller,
        Method::Classical,
        Method::Grid,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Method::Sm => "sm",
            Method::Tdva => "tdva",
            Method::Heller => "heller",
            Method::Classical => "classical",
            Method::Grid => "grid",
        }
    }

    pub fn tdva_mode(self) -> Option<Mode> {
        match self {
            Method::Tdva => Some(Mode::Full),
            Method::Heller => Some(Mode::Heller),
            Method::Classical => Some(Mode::Classical),
            _ => None,
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.label() == s.trim()).ok_or_else(|| {
            Error::Config(format!(
                "unknown method '{s}' (expected sm, tdva, heller, classical or grid)"
            ))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SdwParams {
    #[serde(default = "one")]
    pub m: f64,
    #[serde(default = "one")]
    pub omega: f64,
    pub x_s: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AoParams {
    pub b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HoParams {
    #[serde(default = "one")]
    pub m: f64,
    #[serde(default = "one")]
    pub omega: f64,
}

fn one() -> f64 {
    1.0
}

/// Either exactly one preset block or raw coefficients (missing ones are 0).
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PotentialSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sdw: Option<SdwParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ao: Option<AoParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ho: Option<HoParams>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a4: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a3: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a0: Option<f64>,
}

impl PotentialSection {
    pub fn sdw(m: f64, omega: f64, x_s: f64) -> Self {
        Self {
            sdw: Some(SdwParams { m, omega, x_s }),
            ..Default::default()
        }
    }

    pub fn ao(b: f64) -> Self {
        Self {
            ao: Some(AoParams { b }),
            ..Default::default()
        }
    }

    pub fn build(&self) -> Result<QuarticPotential> {
        let raw = [self.a4, self.a3, self.a2, self.a1, self.a0];
        let has_raw = raw.iter().any(Option::is_some);
        let presets = self.sdw.is_some() as usize + self.ao.is_some() as usize + self.ho.is_some() as usize;
        if presets + has_raw as usize != 1 {
            return Err(Error::Config(
                "[potential] needs exactly one of: sdw = {..}, ao = {..}, ho = {..}, or coefficients a4..a0".into(),
            ));
        }
        if let Some(p) = self.sdw {
            return QuarticPotential::symmetric_double_well(p.m, p.omega, p.x_s);
        }
        if let Some(p) = self.ao {
            return Ok(QuarticPotential::anharmonic(p.b));
        }
        if let Some(p) = self.ho {
            return Ok(QuarticPotential::harmonic(p.m, p.omega));
        }
        let [a4, a3, a2, a1, a0] = raw.map(|v| v.unwrap_or(0.0));
        Ok(QuarticPotential::new(a4, a3, a2, a1, a0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialSection {
    pub x0: f64,
    pub p0: f64,
    pub mu0: f64,
    #[serde(default)]
    pub alpha0: f64,
}

impl InitialSection {
    pub fn gaussian(&self) -> Result<GaussianParams> {
        GaussianParams::new(self.x0, self.p0, self.mu0, self.alpha0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmPropagator {
    /// Exact propagation through the eigendecomposition.
    #[default]
    Eigen,
    /// RK4 on the coefficient equations (cross-check).
    Rk4,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSection {
    pub methods: Vec<Method>,
    pub t_end: f64,
    #[serde(default = "one")]
    pub dt_out: f64,
    #[serde(default = "default_tdva_dt")]
    pub tdva_dt: f64,
    #[serde(default)]
    pub sm_propagator: SmPropagator,
    #[serde(default = "default_rk4_dt")]
    pub rk4_dt: f64,
    /// Grid runs are far costlier than the others; they stop here
    /// (default: `min(t_end, 100)`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid_t_end: Option<f64>,
    /// Also report eigenvalues at this smaller basis size.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convergence_nmax: Option<usize>,
    #[serde(default)]
    pub exec: Exec,
}

fn default_tdva_dt() -> f64 {
    crate::tdva::DEFAULT_DT
}

fn default_rk4_dt() -> f64 {
    0.005
}

/// Regular `t, x` lattice for the `|Psi|^2` surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensitySection {
    pub t_start: f64,
    pub t_end: f64,
    pub dt: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSection {
    pub snapshot_times: Vec<f64>,
    pub x_min: f64,
    pub x_max: f64,
    pub x_points: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<DensitySection>,
    pub dump_matrix: bool,
    pub dump_spectrum: bool,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self {
            snapshot_times: Vec::new(),
            x_min: -8.0,
            x_max: 8.0,
            x_points: 401,
            density: None,
            dump_matrix: false,
            dump_spectrum: false,
        }
    }
}

impl OutputSection {
    pub fn x_nodes(&self) -> Vec<f64> {
        let n = self.x_points.max(2);
        let h = (self.x_max - self.x_min) / (n - 1) as f64;
        (0..n).map(|i| self.x_min + h * i as f64).collect()
    }
}

/// Settings of the period and extremum estimators reported in the summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct AnalysisSection {
    /// Moving-average window (samples) applied before counting zero crossings.
    pub smoothing: usize,
    /// Extrema of the product and `|C|^2` are taken over `t >= extrema_from`.
    pub extrema_from: f64,
    /// Period search bands `[min, max]` for the spectral estimators.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_band: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product_band: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corr2_band: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub envelope_band: Option<[f64; 2]>,
}

impl Default for AnalysisSection {
    fn default() -> Self {
        Self {
            smoothing: 1,
            extrema_from: 0.0,
            x_band: None,
            product_band: None,
            corr2_band: None,
            envelope_band: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub name: String,
    pub potential: PotentialSection,
    #[serde(default)]
    pub basis: BasisSpec,
    pub initial: InitialSection,
    pub run: RunSection,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub output: OutputSection,
    #[serde(default)]
    pub analysis: AnalysisSection,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        self.potential.build()?;
        self.basis.validate().map_err(|e| Error::Config(e.to_string()))?;
        if !(self.initial.mu0 > 0.0) {
            return bad(format!("mu0 must be positive (got {})", self.initial.mu0));
        }
        if self.run.methods.is_empty() {
            return bad("run.methods is empty".into());
        }
        if !(self.run.t_end > 0.0) {
            return bad(format!("t_end must be positive (got {})", self.run.t_end));
        }
        if !(self.run.dt_out > 0.0) {
            return bad(format!("dt_out must be positive (got {})", self.run.dt_out));
        }
        if !(self.run.tdva_dt > 0.0 && self.run.rk4_dt > 0.0) {
            return bad("solver steps must be positive".into());
        }
        if let Some(n) = self.run.convergence_nmax {
            if n >= self.basis.n_max {
                return bad(format!("convergence_nmax {n} must be below n_max {}", self.basis.n_max));
            }
        }
        if self.run.methods.contains(&Method::Grid) {
            if !(self.grid.dt > 0.0 && self.grid.n_points >= 3 && self.grid.x_hi > self.grid.x_lo) {
                return bad("invalid [grid] section".into());
            }
            let per = self.run.dt_out / self.grid.dt;
            if (per - per.round()).abs() > 1e-9 * per {
                return bad(format!(
                    "dt_out {} is not a multiple of grid dt {}",
                    self.run.dt_out, self.grid.dt
                ));
            }
        }
        if let Some(d) = self.output.density {
            if !(d.dt > 0.0 && d.t_end >= d.t_start) {
                return bad("invalid [output.density] section".into());
            }
        }
        if self.output.x_points < 2 || !(self.output.x_max > self.output.x_min) {
            return bad("invalid output x window".into());
        }
        Ok(())
    }

    pub fn grid_t_end(&self) -> f64 {
        self.run.grid_t_end.unwrap_or(self.run.t_end.min(100.0))
    }
}

fn base(
    name: &str,
    potential: PotentialSection,
    initial: InitialSection,
    methods: &[Method],
    t_end: f64,
    dt_out: f64,
) -> ExperimentConfig {
    ExperimentConfig {
        name: name.to_string(),
        potential,
        basis: BasisSpec::default(),
        initial,
        run: RunSection {
            methods: methods.to_vec(),
            t_end,
            dt_out,
            tdva_dt: default_tdva_dt(),
            sm_propagator: SmPropagator::Eigen,
            rk4_dt: default_rk4_dt(),
            grid_t_end: None,
            convergence_nmax: None,
            exec: Exec::default(),
        },
        grid: GridConfig::default(),
        output: OutputSection::default(),
        analysis: AnalysisSection::default(),
    }
}

/// Packet resting in the left well.
pub fn case1() -> InitialSection {
    InitialSection {
        x0: -SQRT8,
        p0: 0.0,
        mu0: 0.1,
        alpha0: 0.0,
    }
}

/// Packet launched from the barrier top with `p0 = 0.5`.
pub fn case2() -> InitialSection {
    InitialSection {
        x0: 0.0,
        p0: 0.5,
        mu0: 0.1,
        alpha0: 0.0,
    }
}

pub fn ao_initial() -> InitialSection {
    InitialSection {
        x0: -1.0,
        p0: 0.0,
        mu0: 0.1,
        alpha0: 0.0,
    }
}

fn sdw() -> PotentialSection {
    PotentialSection::sdw(1.0, 1.0, SQRT8)
}

fn sdw_analysis() -> AnalysisSection {
    AnalysisSection {
        smoothing: 31,
        extrema_from: 100.0,
        x_band: Some([10.0, 500.0]),
        product_band: Some([50.0, 400.0]),
        corr2_band: Some([50.0, 500.0]),
        envelope_band: None,
    }
}

fn ao_analysis() -> AnalysisSection {
    AnalysisSection {
        smoothing: 1,
        extrema_from: 0.0,
        x_band: Some([2.0, 20.0]),
        product_band: None,
        corr2_band: Some([2.0, 20.0]),
        envelope_band: Some([15.0, 300.0]),
    }
}

pub const PRESETS: [&str; 17] = [
    "fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig11", "fig12", "fig13",
    "fig14", "fig15", "fig16", "spectrum",
];

/// Expand a named preset into one or more runs.
pub fn preset(name: &str) -> Result<Vec<ExperimentConfig>> {
    use Method::*;
    let wave_times = |step: f64, count: usize| (0..count).map(|k| k as f64 * step).collect::<Vec<_>>();
    let density = |t_end: f64, dt: f64| {
        Some(DensitySection {
            t_start: 0.0,
            t_end,
            dt,
        })
    };
    let with = |mut c: ExperimentConfig, f: &dyn Fn(&mut ExperimentConfig)| {
        f(&mut c);
        c
    };
    let sdw_series = |n: &str, init: InitialSection, methods: &[Method]| {
        with(base(n, sdw(), init, methods, 1000.0, 1.0), &|c| {
            c.analysis = sdw_analysis()
        })
    };
    let cfgs = match name {
        "spectrum" | "fig1" => vec![with(base(name, sdw(), case1(), &[Sm], 1.0, 1.0), &|c| {
            c.run.convergence_nmax = Some(20);
            c.output.dump_spectrum = true;
        })],
        "fig2" => vec![
            with(
                base("fig2-left-well", sdw(), case1(), &[Classical], 50.0, 0.05),
                &|_| {},
            ),
            with(
                base("fig2-barrier-top", sdw(), case2(), &[Classical], 50.0, 0.05),
                &|_| {},
            ),
            with(
                base(
                    "fig2-separatrix",
                    sdw(),
                    InitialSection {
                        x0: -SQRT8 * 2f64.sqrt(),
                        p0: 0.0,
                        mu0: 0.1,
                        alpha0: 0.0,
                    },
                    &[Classical],
                    50.0,
                    0.05,
                ),
                &|_| {},
            ),
        ],
        "fig3" => vec![with(base(name, sdw(), case1(), &[Sm], 100.0, 1.0), &|c| {
            c.output.density = density(100.0, 1.0);
            c.output.x_min = -6.0;
            c.output.x_max = 6.0;
            c.output.x_points = 241;
        })],
        "fig4" => vec![with(base(name, sdw(), case1(), &[Sm, Tdva], 25.0, 0.5), &|c| {
            c.output.snapshot_times = wave_times(5.0, 6);
        })],
        "fig5" | "fig6" | "fig7" | "fig8" => vec![sdw_series(name, case1(), &[Sm, Tdva])],
        "fig9" => vec![with(base(name, sdw(), case2(), &[Sm], 100.0, 1.0), &|c| {
            c.output.density = density(100.0, 1.0);
            c.output.x_min = -6.0;
            c.output.x_max = 6.0;
            c.output.x_points = 241;
        })],
        "fig10" => vec![with(base(name, sdw(), case2(), &[Sm, Tdva], 25.0, 0.5), &|c| {
            c.output.snapshot_times = wave_times(5.0, 6);
        })],
        "fig11" | "fig12" | "fig13" => vec![sdw_series(name, case2(), &[Sm, Tdva])],
        "fig14" => [0.01, 0.1]
            .iter()
            .zip(["fig14a", "fig14b"])
            .map(|(&b, n)| {
                with(
                    base(n, PotentialSection::ao(b), ao_initial(), &[Sm], 100.0, 0.1),
                    &|c| {
                        c.analysis = ao_analysis();
                        c.output.density = density(100.0, 0.5);
                        c.output.x_min = -4.0;
                        c.output.x_max = 4.0;
                        c.output.x_points = 161;
                    },
                )
            })
            .collect(),
        "fig15" => vec![with(
            base(name, PotentialSection::ao(0.1), ao_initial(), &[Sm, Tdva], 63.0, 0.1),
            &|c| {
                c.analysis = ao_analysis();
                c.output.snapshot_times = wave_times(2.0 * std::f64::consts::PI, 11);
                c.output.x_min = -4.0;
                c.output.x_max = 4.0;
            },
        )],
        "fig16" => vec![with(
            base(name, PotentialSection::ao(0.1), ao_initial(), &[Sm, Tdva], 500.0, 0.1),
            &|c| {
                c.analysis = ao_analysis();
            },
        )],
        _ => {
            return Err(Error::Config(format!(
                "unknown preset '{name}' (available: {})",
                PRESETS.join(", ")
            )))
        }
    };
    for c in &cfgs {
        c.validate()?;
    }
    Ok(cfgs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_presets_validate() {
        for p in PRESETS {
            let cfgs = preset(p).unwrap();
            assert!(!cfgs.is_empty());
            for c in cfgs {
                let back = ExperimentConfig::from_toml(&c.to_toml()).unwrap();
                assert_eq!(back, c, "{p}");
            }
        }
        assert!(preset("fig99").is_err());
        assert_eq!(preset("fig14").unwrap().len(), 2);
    }

    #[test]
    fn preset_parameter_sets() {
        let c = &preset("fig5").unwrap()[0];
        assert_eq!(c.initial, case1());
        let u = c.potential.build().unwrap();
        assert_eq!(u, QuarticPotential::symmetric_double_well(1.0, 1.0, SQRT8).unwrap());
        assert_eq!(c.basis.n_max, 30);
        let c = &preset("fig16").unwrap()[0];
        assert_eq!(c.potential.build().unwrap(), QuarticPotential::anharmonic(0.1));
        assert_eq!((c.initial.x0, c.initial.p0), (-1.0, 0.0));
    }

    #[test]
    fn parses_minimal_config() {
        let text = r#"
            name = "demo"
            [potential]
            a4 = 0.25
            a2 = -1.0
            [initial]
            x0 = 1.0
            p0 = 0.0
            mu0 = 0.2
            [run]
            methods = ["sm", "grid"]
            t_end = 5.0
            dt_out = 0.5
        "#;
        let c = ExperimentConfig::from_toml(text).unwrap();
        assert_eq!(
            c.potential.build().unwrap(),
            QuarticPotential::new(0.25, 0.0, -1.0, 0.0, 0.0)
        );
        assert_eq!(c.basis, BasisSpec::default());
        assert_eq!(c.run.methods, vec![Method::Sm, Method::Grid]);
        assert_eq!(c.grid, GridConfig::default());
        assert_eq!(c.grid_t_end(), 5.0);
    }

    #[test]
    fn preset_blocks_parse() {
        let text = r#"
            name = "ao"
            [potential]
            ao = { b = 0.1 }
            [initial]
            x0 = -1.0
            p0 = 0.0
            mu0 = 0.1
            [run]
            methods = ["tdva"]
            t_end = 5.0
        "#;
        let c = ExperimentConfig::from_toml(text).unwrap();
        assert_eq!(c.potential.build().unwrap(), QuarticPotential::anharmonic(0.1));
    }

    #[test]
    fn rejects_bad_configs() {
        let good = preset("fig5").unwrap().remove(0);
        let mut c = good.clone();
        c.initial.mu0 = 0.0;
        assert!(c.validate().is_err());
        let mut c = good.clone();
        c.run.methods.clear();
        assert!(c.validate().is_err());
        let mut c = good.clone();
        c.potential.ao = Some(AoParams { b: 0.1 });
        assert!(c.validate().is_err());
        let mut c = good.clone();
        c.run.dt_out = 0.0;
        assert!(c.validate().is_err());
        assert!(ExperimentConfig::from_toml("name = 1").is_err());
        let unknown = good.to_toml().replace("[run]", "[run]\nbogus = 3");
        assert!(ExperimentConfig::from_toml(&unknown).unwrap_err().is_config());
        assert!("sm".parse::<Method>().is_ok());
        assert!("spectral".parse::<Method>().is_err());
    }
}
