//! Executes an [`ExperimentConfig`]: runs every requested method, writes the
//! CSV artifacts and a `summary.json`, and compares finished runs.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;

use crate::analysis;
use crate::config::{ExperimentConfig, Method, SmPropagator};
use crate::error::{Error, Result};
use crate::grid::GridPropagator;
use crate::hamiltonian::{convergence_check, ConvergenceCheck};
use crate::par::{map_slice, Exec};
use crate::potential::QuarticPotential;
use crate::spectral::{self, GaussianParams, ObservableRecord, SpectralSolver};
use crate::tdva::{classical, Mode, Tdva, TdvaState};

pub const SERIES_HEADER: [&str; 9] = ["t", "x", "p", "dx2", "dp2", "sym", "corr2", "norm", "energy"];

/// Doubles are written with 17 significant digits so they round-trip exactly.
pub fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSummary {
    pub eigenvalues: Vec<f64>,
    pub gap: f64,
    pub tunneling_period: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub convergence: Option<ConvergenceCheck>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassicalSummary {
    pub energy: f64,
    pub turning_points: Option<(f64, f64)>,
    pub momentum_extremum: Option<f64>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct MethodSummary {
    pub samples: usize,
    pub t_end: f64,
    pub x_period_zero_crossing: Option<f64>,
    pub x_period_zero_crossing_smoothed: Option<f64>,
    pub x_period_spectral: Option<f64>,
    pub x_envelope_period: Option<f64>,
    pub x_min: Option<f64>,
    pub x_max: Option<f64>,
    pub product_initial: Option<f64>,
    pub product_min: Option<f64>,
    pub product_max: Option<f64>,
    pub product_period_spectral: Option<f64>,
    pub corr2_min: Option<f64>,
    pub corr2_max: Option<f64>,
    pub corr2_period_spectral: Option<f64>,
    /// Largest `|dx2 dp2 - (hbar^2 + sym^2)/4|` over the run.
    pub identity_violation_max: Option<f64>,
    pub norm_initial: Option<f64>,
    pub norm_drift: Option<f64>,
    pub energy_drift: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub name: String,
    pub complete: bool,
    pub spectrum: Option<SpectrumSummary>,
    /// `1 - sum |c_n(0)|^2`.
    pub norm_deficit: Option<f64>,
    pub classical: Option<ClassicalSummary>,
    pub methods: BTreeMap<String, MethodSummary>,
    pub files: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub out_dir: PathBuf,
    pub summary: Summary,
}

impl RunReport {
    pub fn complete(&self) -> bool {
        self.summary.complete
    }
}

/// Wavefunction samples at one time.
#[derive(Debug, Clone)]
pub struct Snapshot {
    pub t: f64,
    pub psi: Vec<Complex64>,
}

#[derive(Debug, Clone, Default)]
pub struct MethodOutput {
    pub records: Vec<ObservableRecord>,
    /// Amplitudes on the output x window at the snapshot times.
    pub snapshots: Vec<Snapshot>,
    /// `|Psi|^2` on the output x window at the density lattice times.
    pub density: Vec<(f64, Vec<f64>)>,
    /// Grid-method snapshots live on the propagator's own nodes.
    pub snapshot_nodes: Option<Vec<f64>>,
}

struct Context<'a> {
    cfg: &'a ExperimentConfig,
    potential: QuarticPotential,
    initial: GaussianParams,
    solver: Option<&'a SpectralSolver>,
    xs: Vec<f64>,
    density_times: Vec<f64>,
}

fn density_times(cfg: &ExperimentConfig) -> Vec<f64> {
    match cfg.output.density {
        Some(d) => {
            let n = ((d.t_end - d.t_start) / d.dt + 1e-9).floor() as usize;
            (0..=n).map(|k| d.t_start + k as f64 * d.dt).collect()
        }
        None => Vec::new(),
    }
}

fn run_sm(ctx: &Context, exec: Exec) -> Result<MethodOutput> {
    let cfg = ctx.cfg;
    let solver = ctx.solver.expect("spectral solver is built when sm is requested");
    let basis = solver.basis;
    let state0 = spectral::project_initial_with(&ctx.initial, &basis, exec)?;
    let times = spectral::sample_times(cfg.run.t_end, cfg.run.dt_out, true);
    let records = match cfg.run.sm_propagator {
        SmPropagator::Eigen => solver.time_series(&state0, &times, exec),
        SmPropagator::Rk4 => {
            let mut out = Vec::with_capacity(times.len());
            let mut s = state0.clone();
            for &t in &times {
                if t > s.t {
                    s = spectral::propagate_rk4(&s, &solver.hamiltonian, t - s.t, cfg.run.rk4_dt)?;
                    s.t = t;
                }
                out.push(spectral::observables(&s, &state0, &basis, &solver.hamiltonian));
            }
            out
        }
    };
    let prop = solver.propagator(&state0);
    let snapshots = map_slice(exec, &cfg.output.snapshot_times, |&t| Snapshot {
        t,
        psi: spectral::reconstruct_with(&prop.at(t), &basis, &ctx.xs, Exec::Sequential),
    });
    let density = map_slice(exec, &ctx.density_times, |&t| {
        let psi = spectral::reconstruct_with(&prop.at(t), &basis, &ctx.xs, Exec::Sequential);
        (t, psi.iter().map(|p| p.norm_sqr()).collect())
    });
    Ok(MethodOutput {
        records,
        snapshots,
        density,
        snapshot_nodes: None,
    })
}

fn run_tdva(ctx: &Context, mode: Mode) -> Result<MethodOutput> {
    let cfg = ctx.cfg;
    let tdva = Tdva::new(ctx.potential, cfg.basis.m, cfg.basis.hbar)?;
    let s0 = TdvaState::from_gaussian(&ctx.initial, 0.0);
    let dt = cfg.run.tdva_dt;
    let traj = tdva.integrate(&s0, cfg.run.t_end, dt, cfg.run.dt_out, mode)?;
    let records = traj.iter().map(|s| tdva.observables(s, &s0, mode)).collect();
    // States between output samples: continue from the last sample at or before t.
    let state_at = |t: f64| -> Result<TdvaState> {
        let k = ((t / cfg.run.dt_out) + 1e-9).floor().max(0.0) as usize;
        let k = k.min(traj.len() - 1);
        let start = traj[k];
        let rest = t - start.t;
        if rest <= 1e-12 {
            return Ok(start);
        }
        Ok(*tdva.integrate(&start, t, dt, rest, mode)?.last().expect("nonempty"))
    };
    let hbar = cfg.basis.hbar;
    let mut snapshots = Vec::new();
    for &t in &cfg.output.snapshot_times {
        let s = state_at(t)?;
        snapshots.push(Snapshot {
            t,
            psi: crate::tdva::gaussian_wavefunction(&s, hbar, &ctx.xs),
        });
    }
    let mut density = Vec::new();
    for &t in &ctx.density_times {
        let s = state_at(t)?;
        let psi = crate::tdva::gaussian_wavefunction(&s, hbar, &ctx.xs);
        density.push((t, psi.iter().map(|p| p.norm_sqr()).collect()));
    }
    Ok(MethodOutput {
        records,
        snapshots,
        density,
        snapshot_nodes: None,
    })
}

fn run_grid(ctx: &Context) -> Result<MethodOutput> {
    let cfg = ctx.cfg;
    cfg.grid.check_resolution(&ctx.initial, cfg.basis.hbar)?;
    if cfg.grid.richardson {
        let records = crate::grid::richardson_series(
            cfg.grid,
            ctx.potential,
            cfg.basis.m,
            cfg.basis.hbar,
            &ctx.initial,
            cfg.grid_t_end(),
            cfg.run.dt_out,
            cfg.run.exec,
        )?;
        return Ok(MethodOutput {
            records,
            ..Default::default()
        });
    }
    let prop = GridPropagator::new(cfg.grid, ctx.potential, cfg.basis.m, cfg.basis.hbar)?;
    let s0 = prop.initial_gaussian(&ctx.initial);
    let (records, snaps) = prop.time_series(&s0, ctx.cfg.grid_t_end(), cfg.run.dt_out, &cfg.output.snapshot_times)?;
    Ok(MethodOutput {
        records,
        snapshots: snaps.into_iter().map(|s| Snapshot { t: s.t, psi: s.psi }).collect(),
        density: Vec::new(),
        snapshot_nodes: Some(prop.nodes().to_vec()),
    })
}

pub fn run_method(ctx_cfg: &ExperimentConfig, method: Method, solver: Option<&SpectralSolver>) -> Result<MethodOutput> {
    let ctx = Context {
        cfg: ctx_cfg,
        potential: ctx_cfg.potential.build()?,
        initial: ctx_cfg.initial.gaussian()?,
        solver,
        xs: ctx_cfg.output.x_nodes(),
        density_times: density_times(ctx_cfg),
    };
    match method {
        Method::Sm => run_sm(&ctx, ctx_cfg.run.exec),
        Method::Grid => run_grid(&ctx),
        m => run_tdva(&ctx, m.tdva_mode().expect("tdva family")),
    }
}

pub fn summarize(records: &[ObservableRecord], cfg: &ExperimentConfig) -> MethodSummary {
    let a = &cfg.analysis;
    let hbar = cfg.basis.hbar;
    let t: Vec<f64> = records.iter().map(|r| r.t).collect();
    let x: Vec<f64> = records.iter().map(|r| r.x_mean).collect();
    let prod: Vec<f64> = records.iter().map(|r| r.uncertainty_product()).collect();
    let corr: Vec<f64> = records.iter().map(|r| r.corr2).collect();
    let band = |b: Option<[f64; 2]>, y: &[f64]| b.and_then(|[lo, hi]| analysis::dominant_period(&t, y, lo, hi));
    let drift = |f: fn(&ObservableRecord) -> f64| {
        let first = records.first().map(f)?;
        Some(records.iter().map(|r| (f(r) - first).abs()).fold(0.0, f64::max))
    };
    let pe = analysis::extrema(&t, &prod, a.extrema_from);
    let ce = analysis::extrema(&t, &corr, a.extrema_from);
    let xe = analysis::extrema(&t, &x, 0.0);
    MethodSummary {
        samples: records.len(),
        t_end: t.last().copied().unwrap_or(0.0),
        x_period_zero_crossing: analysis::zero_crossing_period(&t, &x, 1),
        x_period_zero_crossing_smoothed: analysis::zero_crossing_period(&t, &x, a.smoothing.max(1)),
        x_period_spectral: band(a.x_band, &x),
        x_envelope_period: a
            .envelope_band
            .and_then(|[lo, hi]| analysis::envelope_period(&t, &x, lo, hi)),
        x_min: xe.map(|e| e.0),
        x_max: xe.map(|e| e.1),
        product_initial: prod.first().copied(),
        product_min: pe.map(|e| e.0),
        product_max: pe.map(|e| e.1),
        product_period_spectral: band(a.product_band, &prod),
        corr2_min: ce.map(|e| e.0),
        corr2_max: ce.map(|e| e.1),
        corr2_period_spectral: band(a.corr2_band, &corr),
        identity_violation_max: records
            .iter()
            .map(|r| r.gaussian_identity_violation(hbar).abs())
            .reduce(f64::max),
        norm_initial: records.first().map(|r| r.norm),
        norm_drift: drift(|r| r.norm),
        energy_drift: drift(|r| r.energy),
        error: None,
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Csv(e.to_string())
}

pub fn write_series(path: &Path, records: &[ObservableRecord], method: Method) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    let mut header: Vec<&str> = SERIES_HEADER.to_vec();
    if method != Method::Sm {
        header.push("method");
    }
    w.write_record(&header).map_err(csv_err)?;
    for r in records {
        let mut row: Vec<String> = [r.t, r.x_mean, r.p_mean, r.dx2, r.dp2, r.sym, r.corr2, r.norm, r.energy]
            .iter()
            .map(|v| fmt(*v))
            .collect();
        if method != Method::Sm {
            row.push(method.label().to_string());
        }
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn write_snapshot(path: &Path, xs: &[f64], psi: &[Complex64]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    w.write_record(["x", "re_psi", "im_psi", "abs2"]).map_err(csv_err)?;
    for (x, p) in xs.iter().zip(psi) {
        w.write_record([fmt(*x), fmt(p.re), fmt(p.im), fmt(p.norm_sqr())])
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

fn write_density(path: &Path, xs: &[f64], density: &[(f64, Vec<f64>)]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    w.write_record(["t", "x", "abs2"]).map_err(csv_err)?;
    for (t, d) in density {
        for (x, v) in xs.iter().zip(d) {
            w.write_record([fmt(*t), fmt(*x), fmt(*v)]).map_err(csv_err)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn write_rows(path: &Path, header: &[&str], rows: impl IntoIterator<Item = Vec<f64>>) -> Result<()> {
    let mut w = csv::Writer::from_path(path).map_err(csv_err)?;
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(row.iter().map(|v| fmt(*v))).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Snapshot file name; times are printed with up to six decimals.
fn snapshot_name(method: Method, t: f64) -> String {
    let s = format!("{t:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    format!("snapshot_{}_t{}.csv", method.label(), s)
}

/// Run one experiment into `out_dir`.
///
/// Configuration problems are returned as errors; a numerical failure in one
/// method is recorded in its summary entry and marks the run incomplete while
/// the other methods still produce output.
pub fn run(cfg: &ExperimentConfig, out_dir: &Path) -> Result<RunReport> {
    cfg.validate()?;
    std::fs::create_dir_all(out_dir)?;
    let potential = cfg.potential.build()?;
    let initial = cfg.initial.gaussian()?;
    let mut files = Vec::new();
    let record = |p: &Path, files: &mut Vec<String>| {
        files.push(p.file_name().unwrap().to_string_lossy().into_owned());
    };

    let xs = cfg.output.x_nodes();
    let path = out_dir.join("potential.csv");
    write_rows(&path, &["x", "u"], xs.iter().map(|&x| vec![x, potential.value(x)]))?;
    record(&path, &mut files);

    let mut complete = true;
    let needs_solver = cfg.run.methods.contains(&Method::Sm) || cfg.output.dump_matrix || cfg.output.dump_spectrum;
    let solver = if needs_solver {
        match SpectralSolver::new(cfg.basis, potential) {
            Ok(s) => Some(s),
            Err(e) if e.is_config() => return Err(e),
            Err(e) => {
                log::error!("{}: eigensolver failed: {e}", cfg.name);
                complete = false;
                None
            }
        }
    } else {
        None
    };

    let mut spectrum = None;
    let mut norm_deficit = None;
    if let Some(s) = &solver {
        let convergence = match cfg.run.convergence_nmax {
            Some(n) => Some(convergence_check(cfg.basis, potential, n, 5)?),
            None => None,
        };
        let ev = &s.eigen.eigenvalues;
        spectrum = Some(SpectrumSummary {
            eigenvalues: ev.iter().take(5).copied().collect(),
            gap: if ev.len() > 1 { s.eigen.gap() } else { f64::NAN },
            tunneling_period: if ev.len() > 1 {
                s.eigen.tunneling_period(cfg.basis.hbar)
            } else {
                f64::NAN
            },
            convergence,
        });
        let state0 = spectral::project_initial_with(&initial, &cfg.basis, cfg.run.exec)?;
        norm_deficit = Some(1.0 - state0.norm());
        if cfg.output.dump_matrix {
            let path = out_dir.join("matrix.csv");
            let n = s.hamiltonian.size();
            write_rows(
                &path,
                &["n", "k", "h"],
                (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| vec![i as f64, j as f64, s.hamiltonian.elements[(i, j)]]),
            )?;
            record(&path, &mut files);
        }
        if cfg.output.dump_spectrum {
            let path = out_dir.join("spectrum.csv");
            let n = ev.len();
            let mut header = vec!["nu".to_string(), "energy".to_string()];
            header.extend((0..n).map(|k| format!("v{k}")));
            let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
            write_rows(
                &path,
                &header_refs,
                (0..n).map(|nu| {
                    let mut row = vec![nu as f64, ev[nu]];
                    row.extend(s.eigen.eigenvectors.column(nu));
                    row
                }),
            )?;
            record(&path, &mut files);
        }
    }

    let classical = cfg.run.methods.contains(&Method::Classical).then(|| {
        let energy = initial.p_mean * initial.p_mean / (2.0 * cfg.basis.m) + potential.value(initial.x_mean);
        ClassicalSummary {
            energy,
            turning_points: classical::turning_points(&potential, energy).ok(),
            momentum_extremum: classical::momentum_extremum(&potential, cfg.basis.m, energy).ok(),
        }
    });

    let mut methods: Vec<Method> = cfg.run.methods.clone();
    methods.sort();
    methods.dedup();
    let runnable: Vec<Method> = methods
        .iter()
        .copied()
        .filter(|m| *m != Method::Sm || solver.is_some())
        .collect();
    let outputs = map_slice(cfg.run.exec, &runnable, |&m| (m, run_method(cfg, m, solver.as_ref())));

    let mut summaries = BTreeMap::new();
    for m in methods.iter().filter(|m| !runnable.contains(m)) {
        summaries.insert(
            m.label().to_string(),
            MethodSummary {
                error: Some("eigensolver failed".into()),
                ..Default::default()
            },
        );
    }
    for (m, out) in outputs {
        let out = match out {
            Ok(o) => o,
            Err(e) if e.is_config() => return Err(e),
            Err(e) => {
                log::error!("{}: {} failed: {e}", cfg.name, m.label());
                complete = false;
                summaries.insert(
                    m.label().to_string(),
                    MethodSummary {
                        error: Some(e.to_string()),
                        ..Default::default()
                    },
                );
                continue;
            }
        };
        let path = out_dir.join(format!("series_{}.csv", m.label()));
        write_series(&path, &out.records, m)?;
        record(&path, &mut files);
        for snap in &out.snapshots {
            let path = out_dir.join(snapshot_name(m, snap.t));
            let nodes = out.snapshot_nodes.as_deref().unwrap_or(&xs);
            write_snapshot(&path, nodes, &snap.psi)?;
            record(&path, &mut files);
        }
        if !out.density.is_empty() {
            let path = out_dir.join(format!("density_{}.csv", m.label()));
            write_density(&path, &xs, &out.density)?;
            record(&path, &mut files);
        }
        summaries.insert(m.label().to_string(), summarize(&out.records, cfg));
    }

    files.push("summary.json".into());
    let summary = Summary {
        name: cfg.name.clone(),
        complete,
        spectrum,
        norm_deficit,
        classical,
        methods: summaries,
        files,
    };
    let json = serde_json::to_string_pretty(&summary).map_err(|e| Error::Csv(e.to_string()))?;
    std::fs::write(out_dir.join("summary.json"), json + "\n")?;
    std::fs::write(out_dir.join("config.toml"), cfg.to_toml())?;
    Ok(RunReport {
        out_dir: out_dir.to_path_buf(),
        summary,
    })
}

/// Run several configs; with more than one, each gets a subdirectory named after it.
pub fn run_all(cfgs: &[ExperimentConfig], out_dir: &Path) -> Result<Vec<RunReport>> {
    if cfgs.len() == 1 {
        return Ok(vec![run(&cfgs[0], out_dir)?]);
    }
    cfgs.iter().map(|c| run(c, &out_dir.join(&c.name))).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldDiff {
    pub field: String,
    pub max_abs: f64,
    pub rms: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub rows: usize,
    pub tolerance: f64,
    pub fields: Vec<FieldDiff>,
}

impl CompareReport {
    pub fn pass(&self) -> bool {
        self.fields.iter().all(|f| f.pass)
    }
}

/// Columns `t` and `fields` of a series CSV, keeping rows with `t <= t_max`.
fn read_columns(path: &Path, fields: &[String], t_max: Option<f64>) -> Result<Vec<Vec<f64>>> {
    let mut r = csv::Reader::from_path(path).map_err(csv_err)?;
    let header = r.headers().map_err(csv_err)?.clone();
    let index = |name: &str| {
        header
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::Csv(format!("{} has no column '{name}'", path.display())))
    };
    let mut idx = vec![index("t")?];
    for f in fields {
        idx.push(index(f)?);
    }
    let mut cols = vec![Vec::new(); idx.len()];
    for (line, row) in r.records().enumerate() {
        let row = row.map_err(csv_err)?;
        let parse = |i: usize| -> Result<f64> {
            row.get(i)
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| Error::Csv(format!("{}: bad number on data row {}", path.display(), line + 1)))
        };
        let t = parse(idx[0])?;
        if t_max.is_some_and(|m| t > m + 1e-9) {
            continue;
        }
        for (c, &i) in cols.iter_mut().zip(&idx) {
            c.push(parse(i)?);
        }
    }
    Ok(cols)
}

/// Per-field max-abs and RMS differences between two series CSVs with the
/// same time grid.
pub fn compare(a: &Path, b: &Path, fields: &[String], tolerance: f64, t_max: Option<f64>) -> Result<CompareReport> {
    if fields.is_empty() {
        return Err(Error::Config("no fields to compare".into()));
    }
    let ca = read_columns(a, fields, t_max)?;
    let cb = read_columns(b, fields, t_max)?;
    let (ta, tb) = (&ca[0], &cb[0]);
    if ta.len() != tb.len() {
        return Err(Error::GridMismatch(format!("{} rows vs {} rows", ta.len(), tb.len())));
    }
    if let Some(i) = (0..ta.len()).find(|&i| (ta[i] - tb[i]).abs() > 1e-9 * ta[i].abs().max(1.0)) {
        return Err(Error::GridMismatch(format!("row {i}: t = {} vs {}", ta[i], tb[i])));
    }
    let rows = ta.len();
    let diffs = fields
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let (u, v) = (&ca[k + 1], &cb[k + 1]);
            let mut max_abs: f64 = 0.0;
            let mut sq = 0.0;
            for (x, y) in u.iter().zip(v) {
                let d = (x - y).abs();
                max_abs = max_abs.max(d);
                sq += d * d;
            }
            let rms = if rows > 0 { (sq / rows as f64).sqrt() } else { 0.0 };
            FieldDiff {
                field: f.clone(),
                max_abs,
                rms,
                pass: max_abs <= tolerance,
            }
        })
        .collect();
    Ok(CompareReport {
        rows,
        tolerance,
        fields: diffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format_round_trips() {
        for v in [0.1, -2.0f64.sqrt(), 1e-300, 6.02e23, 0.0] {
            assert_eq!(fmt(v).parse::<f64>().unwrap(), v);
        }
    }

    #[test]
    fn snapshot_names() {
        assert_eq!(snapshot_name(Method::Sm, 5.0), "snapshot_sm_t5.csv");
        assert_eq!(
            snapshot_name(Method::Tdva, 12.566370614359172),
            "snapshot_tdva_t12.566371.csv"
        );
    }
}
