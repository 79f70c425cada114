use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use gwp::config::{self, ExperimentConfig, Method, PRESETS};
use gwp::runner::{self, RunReport};
use gwp::{Error, Exec};

/// Gaussian wavepacket dynamics in quartic potentials: spectral, variational,
/// classical and grid propagation with CSV output.
#[derive(Debug, Parser)]
#[command(name = "gwp", version, about, long_about = None)]
struct Cli {
    /// Built-in experiment (see --list-presets).
    #[arg(long, conflicts_with = "config")]
    preset: Option<String>,

    /// Experiment config file (TOML).
    #[arg(long)]
    config: Option<PathBuf>,

    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,

    /// Comma-separated methods overriding the config: sm,tdva,heller,classical,grid.
    #[arg(long, value_delimiter = ',')]
    methods: Option<Vec<String>>,

    /// Write the Hamiltonian matrix to matrix.csv.
    #[arg(long)]
    dump_matrix: bool,

    /// Write eigenvalues and eigenvectors to spectrum.csv.
    #[arg(long)]
    dump_spectrum: bool,

    /// Highest basis index N_m.
    #[arg(long)]
    nmax: Option<usize>,

    /// Also diagonalize with this smaller N_m and report the eigenvalue differences.
    #[arg(long)]
    convergence: Option<usize>,

    /// End time override.
    #[arg(long)]
    t_end: Option<f64>,

    /// Run everything on the calling thread.
    #[arg(long)]
    sequential: bool,

    /// Print the resolved config(s) as TOML instead of running.
    #[arg(long)]
    print_config: bool,

    /// List preset names and exit.
    #[arg(long)]
    list_presets: bool,

    /// Compare two series CSVs: --compare A B --fields x,dx2 --tol 1e-3.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    compare: Option<Vec<PathBuf>>,

    /// Columns to compare.
    #[arg(long, value_delimiter = ',', requires = "compare")]
    fields: Option<Vec<String>>,

    /// Largest allowed absolute difference.
    #[arg(long, requires = "compare")]
    tol: Option<f64>,

    /// Only compare rows with t <= T.
    #[arg(long, requires = "compare")]
    t_max: Option<f64>,
}

const EXIT_CONFIG: u8 = 1;
const EXIT_NUMERICAL: u8 = 2;
const EXIT_COMPARE: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    if e.is_config() {
        EXIT_CONFIG
    } else {
        match e {
            Error::Io(_) | Error::Csv(_) | Error::GridMismatch(_) => EXIT_CONFIG,
            _ => EXIT_NUMERICAL,
        }
    }
}

fn configs(cli: &Cli) -> Result<Vec<ExperimentConfig>, Error> {
    let mut cfgs = match (&cli.preset, &cli.config) {
        (Some(name), _) => config::preset(name)?,
        (None, Some(path)) => vec![ExperimentConfig::load(path)?],
        (None, None) => return Err(Error::Config("either --preset or --config is required".into())),
    };
    let methods = cli
        .methods
        .as_ref()
        .map(|list| list.iter().map(|s| s.parse()).collect::<Result<Vec<Method>, _>>())
        .transpose()?;
    for c in &mut cfgs {
        if let Some(m) = &methods {
            c.run.methods = m.clone();
        }
        if let Some(n) = cli.nmax {
            c.basis.n_max = n;
        }
        if let Some(n) = cli.convergence {
            c.run.convergence_nmax = Some(n);
        }
        if let Some(t) = cli.t_end {
            c.run.t_end = t;
        }
        c.output.dump_matrix |= cli.dump_matrix;
        c.output.dump_spectrum |= cli.dump_spectrum;
        if cli.sequential {
            c.run.exec = Exec::Sequential;
        }
        c.validate()?;
    }
    Ok(cfgs)
}

fn report(r: &RunReport) {
    let s = &r.summary;
    println!("{} -> {}", s.name, r.out_dir.display());
    if let Some(sp) = &s.spectrum {
        let ev: Vec<String> = sp.eigenvalues.iter().map(|e| format!("{e:.6}")).collect();
        println!(
            "  E = [{}]  dE = {:.6}  T = {:.3}",
            ev.join(", "),
            sp.gap,
            sp.tunneling_period
        );
        if let Some(c) = &sp.convergence {
            println!(
                "  max |E(N={}) - E(N={})| = {:.3e}",
                c.n_small, c.n_large, c.max_abs_diff
            );
        }
    }
    if let Some(d) = s.norm_deficit {
        println!("  norm deficit at t=0: {d:.3e}");
    }
    if let Some(c) = &s.classical {
        if let Some((lo, hi)) = c.turning_points {
            println!("  classical: E = {:.6}, turning points [{lo:.6}, {hi:.6}]", c.energy);
        }
    }
    let opt = |v: Option<f64>| v.map_or("-".to_string(), |v| format!("{v:.4}"));
    for (name, m) in &s.methods {
        if let Some(e) = &m.error {
            println!("  {name}: FAILED: {e}");
            continue;
        }
        println!(
            "  {name}: x period {} (spectral {}), product [{}, {}], |C|^2 [{}, {}]",
            opt(m.x_period_zero_crossing_smoothed),
            opt(m.x_period_spectral),
            opt(m.product_min),
            opt(m.product_max),
            opt(m.corr2_min),
            opt(m.corr2_max),
        );
    }
    if !s.complete {
        println!("  run incomplete");
    }
}

fn compare(cli: &Cli, paths: &[PathBuf]) -> Result<u8, Error> {
    let fields = cli.fields.clone().unwrap_or_else(|| vec!["x".into()]);
    let tol = cli.tol.unwrap_or(1e-6);
    let rep = runner::compare(&paths[0], &paths[1], &fields, tol, cli.t_max)?;
    println!(
        "{:<8} {:>14} {:>14}  tol {:e}, {} rows",
        "field", "max_abs", "rms", rep.tolerance, rep.rows
    );
    for f in &rep.fields {
        println!(
            "{:<8} {:>14.6e} {:>14.6e}  {}",
            f.field,
            f.max_abs,
            f.rms,
            if f.pass { "ok" } else { "FAIL" }
        );
    }
    Ok(if rep.pass() { 0 } else { EXIT_COMPARE })
}

fn real_main(cli: &Cli) -> Result<u8, Error> {
    if cli.list_presets {
        for p in PRESETS {
            println!("{p}");
        }
        return Ok(0);
    }
    if let Some(paths) = &cli.compare {
        return compare(cli, paths);
    }
    let cfgs = configs(cli)?;
    if cli.print_config {
        for c in &cfgs {
            println!("{}", c.to_toml());
        }
        return Ok(0);
    }
    let reports = runner::run_all(&cfgs, &cli.out)?;
    for r in &reports {
        report(r);
    }
    Ok(if reports.iter().all(RunReport::complete) {
        0
    } else {
        EXIT_NUMERICAL
    })
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_CONFIG } else { 0 });
        }
    };
    if cli.preset.is_none() && cli.config.is_none() && cli.compare.is_none() && !cli.list_presets {
        let _ = Cli::command().print_help();
        return ExitCode::from(EXIT_CONFIG);
    }
    match real_main(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
