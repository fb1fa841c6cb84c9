use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qgeom::gas::{limit_coefficients, limit_curvature, GasModel, Statistics};
use qgeom::verify::{self, Level};
use qgeom_cli::figure::figure_specs;
use qgeom_cli::{
    exit, fmt_num, parse_outputs, run_sweep, write_csv, CliError, CliResult, Grid, Output, Record,
    SweepConfig, SweepRow, DEFAULT_ETA,
};

#[derive(Debug, Parser)]
#[command(name = "qgeom", version, about = "Information geometry of ideal quantum gases")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate every quantity at one point and print key=value lines.
    Eval(EvalArgs),
    /// Evaluate a (β, ξ) grid and write CSV.
    Sweep(SweepArgs),
    /// Print the low-fugacity constants and limit curvatures.
    Limits(LimitsArgs),
    /// Run the cross-validation suites.
    Verify(VerifyArgs),
    /// Write the data behind figure N (1 to 6) as CSV.
    Figure(FigureArgs),
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// fd, be, be0 or classical
    #[arg(long)]
    stat: Option<String>,
    /// Density-of-states exponent (default 0.5)
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
    /// Density-of-states prefactor (default 1)
    #[arg(long)]
    kappa: Option<f64>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    xi: f64,
    /// Comma-separated subset of metric,det,curvature,gbar,rbar,averages
    #[arg(long)]
    outputs: Option<String>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    model: ModelArgs,
    /// Single β instead of a grid
    #[arg(long, conflicts_with = "beta_grid")]
    beta: Option<f64>,
    /// Single ξ instead of a grid
    #[arg(long, conflicts_with = "xi_grid")]
    xi: Option<f64>,
    /// min:max:count[:log]
    #[arg(long)]
    beta_grid: Option<Grid>,
    /// min:max:count[:log]
    #[arg(long)]
    xi_grid: Option<Grid>,
    /// Comma-separated subset of metric,det,curvature,gbar,rbar,averages; empty for none
    #[arg(long)]
    outputs: Option<String>,
    /// JSON sweep description; flags override its fields
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output file (default: standard output)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LimitsArgs {
    #[arg(long, default_value_t = DEFAULT_ETA, allow_negative_numbers = true)]
    eta: f64,
    #[arg(long, default_value_t = 1.0)]
    kappa: f64,
    /// Comma-separated inverse temperatures
    #[arg(long, value_delimiter = ',', default_value = "0,0.5,1,2")]
    betas: Vec<f64>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Quick suites (default)
    #[arg(long, conflicts_with = "full")]
    fast: bool,
    /// Denser grids plus the checks at ξ = 1 - 1e-6
    #[arg(long)]
    full: bool,
}

#[derive(Debug, Args)]
struct FigureArgs {
    n: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit::USAGE
        }
    };
    ExitCode::from(code as u8)
}

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Eval(a) => eval(a),
        Command::Sweep(a) => sweep(a),
        Command::Limits(a) => limits(a),
        Command::Verify(a) => Ok(verify(a)),
        Command::Figure(a) => figure(a),
    }
}

fn outputs_arg(s: Option<&str>) -> CliResult<Option<BTreeSet<Output>>> {
    s.map(parse_outputs).transpose()
}

fn open_output(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn stdout_error(source: io::Error) -> CliError {
    CliError::Io {
        path: "stdout".into(),
        source,
    }
}

fn eval(a: EvalArgs) -> CliResult<i32> {
    let stat: Statistics = a
        .model
        .stat
        .as_deref()
        .ok_or_else(|| CliError::Usage("missing --stat".into()))?
        .parse()?;
    let model = GasModel::new(stat, a.model.eta.unwrap_or(DEFAULT_ETA), a.model.kappa.unwrap_or(1.0))?;
    let outputs = outputs_arg(a.outputs.as_deref())?.unwrap_or_else(Output::all);
    let rec = Record::evaluate(&model, a.beta, a.xi, &outputs)?;
    let mut out = io::stdout().lock();
    rec.write_key_values(&mut out).map_err(stdout_error)?;
    Ok(exit::SUCCESS)
}

fn sweep(a: SweepArgs) -> CliResult<i32> {
    let file = match &a.config {
        Some(p) => SweepConfig::load(p)?,
        None => SweepConfig::default(),
    };
    let flags = SweepConfig {
        stat: a.model.stat,
        eta: a.model.eta,
        kappa: a.model.kappa,
        beta_grid: a.beta_grid.or(a.beta.map(Grid::single)),
        xi_grid: a.xi_grid.or(a.xi.map(Grid::single)),
        outputs: outputs_arg(a.outputs.as_deref())?,
    };
    let spec = file.merged(flags).into_spec()?;
    let rows = run_sweep(&spec);
    write_rows(&rows, a.out.as_deref())
}

fn write_rows(rows: &[SweepRow], out: Option<&Path>) -> CliResult<i32> {
    let failed = rows.iter().filter(|r| r.result.is_err()).count();
    write_csv(rows, open_output(out)?)?;
    if failed > 0 {
        eprintln!("warning: {failed} of {} points failed; see the error column", rows.len());
    }
    Ok(exit::SUCCESS)
}

fn limits(a: LimitsArgs) -> CliResult<i32> {
    let c = limit_coefficients(a.eta)?;
    let fd = GasModel::new(Statistics::FermiDirac, a.eta, a.kappa)?;
    let be = GasModel::new(Statistics::BoseEinstein, a.eta, a.kappa)?;
    let mut table = Vec::with_capacity(a.betas.len());
    for &beta in &a.betas {
        table.push((beta, limit_curvature(&fd, beta)?, limit_curvature(&be, beta)?));
    }
    let mut out = io::stdout().lock();
    let mut print = || -> io::Result<()> {
        writeln!(out, "eta={}", fmt_num(a.eta))?;
        writeln!(out, "kappa={}", fmt_num(a.kappa))?;
        writeln!(out, "f={}", fmt_num(c.f))?;
        writeln!(out, "f_c={}", fmt_num(c.f_c))?;
        writeln!(out, "h={}", fmt_num(c.h))?;
        writeln!(out, "h_c={}", fmt_num(c.h_c))?;
        writeln!(out, "beta,R_fd,R_be")?;
        for (beta, r_fd, r_be) in &table {
            writeln!(out, "{},{},{}", fmt_num(*beta), fmt_num(*r_fd), fmt_num(*r_be))?;
        }
        Ok(())
    };
    print().map_err(stdout_error)?;
    Ok(exit::SUCCESS)
}

fn verify(a: VerifyArgs) -> i32 {
    let level = if a.full && !a.fast { Level::Full } else { Level::Fast };
    let report = verify::run(level);
    for s in &report.suites {
        println!(
            "{} {:<38} tol={:.1e} max={:.3e} checks={}",
            if s.passed { "PASS" } else { "FAIL" },
            s.name,
            s.tolerance,
            s.max_deviation,
            s.checks
        );
        for f in &s.failures {
            println!("    {f}");
        }
    }
    if report.passed() {
        println!("all {} suites passed ({level:?})", report.suites.len());
        exit::SUCCESS
    } else {
        let failed = report.suites.iter().filter(|s| !s.passed).count();
        println!("{failed} of {} suites failed ({level:?})", report.suites.len());
        exit::VERIFY_FAILED
    }
}

fn figure(a: FigureArgs) -> CliResult<i32> {
    let rows: Vec<SweepRow> = figure_specs(a.n)?.iter().flat_map(run_sweep).collect();
    write_rows(&rows, a.out.as_deref())
}
