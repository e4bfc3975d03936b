use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use starbary::experiments::{
    builtin_domain, convergence_table, with_thread_cap, write_csv, write_json, Experiment, Rect,
    ShiftParams, TestDomain, TestFunction, BUILTIN_NAMES,
};
use starbary::{DiskBuilder, Error, LebesgueScan, StarlikeDomain};

/// Rational barycentric interpolation on starlike domains.
#[derive(Parser)]
#[command(name = "starbary", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in domains and their evaluation rectangles.
    Domains,
    /// Interpolate a test function and evaluate at one point.
    Interp(InterpArgs),
    /// Error table over several grid sizes.
    Table(TableArgs),
    /// Lebesgue constant estimate of the disk interpolant.
    Lebesgue(LebesgueArgs),
}

#[derive(Args)]
struct DomainArgs {
    /// Built-in domain name.
    #[arg(
        long,
        conflicts_with = "boundary_file",
        required_unless_present = "boundary_file"
    )]
    domain: Option<String>,
    /// Sampled boundary: lines of `theta rho`, `#` comments.
    #[arg(long)]
    boundary_file: Option<PathBuf>,
    #[arg(long, default_value = "f1")]
    function: String,
}

#[derive(Args)]
struct ShiftArgs {
    /// Shift the nodes with default parameters; any --shift-* flag implies it.
    #[arg(long)]
    shift: bool,
    #[arg(long)]
    shift_alpha: Option<f64>,
    #[arg(long)]
    shift_beta: Option<f64>,
    #[arg(long)]
    shift_eta: Option<f64>,
    #[arg(long)]
    shift_phi: Option<f64>,
}

impl ShiftArgs {
    fn resolve(
        &self,
        defaults: impl FnOnce() -> Result<ShiftParams, Error>,
    ) -> Result<Option<ShiftParams>, Error> {
        let any = self.shift
            || self.shift_alpha.is_some()
            || self.shift_beta.is_some()
            || self.shift_eta.is_some()
            || self.shift_phi.is_some();
        if !any {
            return Ok(None);
        }
        // only derive defaults when something is missing
        let base = match (
            self.shift_alpha,
            self.shift_beta,
            self.shift_eta,
            self.shift_phi,
        ) {
            (Some(alpha), Some(beta), Some(eta), Some(phi_bar)) => ShiftParams {
                alpha,
                beta,
                eta,
                phi_bar,
            },
            _ => defaults()?,
        };
        let p = ShiftParams {
            alpha: self.shift_alpha.unwrap_or(base.alpha),
            beta: self.shift_beta.unwrap_or(base.beta),
            eta: self.shift_eta.unwrap_or(base.eta),
            phi_bar: self.shift_phi.unwrap_or(base.phi_bar),
        };
        p.shifts()?;
        Ok(Some(p))
    }
}

#[derive(Args)]
struct InterpArgs {
    #[command(flatten)]
    domain: DomainArgs,
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    n2: usize,
    #[command(flatten)]
    shift: ShiftArgs,
    /// Evaluation point `X,Y`.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    eval: (f64, f64),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    domain: DomainArgs,
    /// Comma-separated sizes, e.g. `10x30,20x60`.
    #[arg(long, value_parser = parse_sizes)]
    sizes: Sizes,
    #[command(flatten)]
    shift: ShiftArgs,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Record wall-clock time per row (makes output non-reproducible).
    #[arg(long)]
    timing: bool,
    /// Evaluation lattice points per axis.
    #[arg(long, default_value_t = 170)]
    lattice: usize,
}

#[derive(Args)]
struct LebesgueArgs {
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    n2: usize,
    #[command(flatten)]
    shift: ShiftArgs,
    /// Radial lattice size.
    #[arg(long, default_value_t = 500)]
    m1: usize,
    /// Angular lattice size.
    #[arg(long, default_value_t = 500)]
    m2: usize,
    /// Sum the full 2D basis at every lattice point instead of multiplying
    /// the 1D maxima.
    #[arg(long)]
    full_scan: bool,
}

#[derive(Clone)]
struct Sizes(Vec<(usize, usize)>);

fn parse_point(s: &str) -> Result<(f64, f64), String> {
    let (x, y) = s.split_once(',').ok_or("expected X,Y")?;
    let p = |v: &str| v.trim().parse::<f64>().map_err(|e| format!("{v:?}: {e}"));
    Ok((p(x)?, p(y)?))
}

fn parse_sizes(s: &str) -> Result<Sizes, String> {
    let sizes = s
        .split(',')
        .map(|item| {
            let (a, b) = item
                .trim()
                .split_once('x')
                .ok_or_else(|| format!("{item:?}: expected N1xN2"))?;
            let n = |v: &str| v.parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
            Ok((n(a)?, n(b)?))
        })
        .collect::<Result<Vec<_>, String>>()?;
    if sizes.is_empty() {
        return Err("no sizes given".into());
    }
    Ok(Sizes(sizes))
}

enum Failure {
    Usage(String),
    Numerical(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Sampling { .. } | Error::NodeCollision | Error::EmptyGrid => {
                Failure::Numerical(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn load_domain(args: &DomainArgs) -> Result<(TestDomain, TestFunction), Failure> {
    let function: TestFunction = args.function.parse()?;
    let domain = match (&args.domain, &args.boundary_file) {
        (Some(name), _) => builtin_domain(name)?,
        (None, Some(path)) => {
            let domain = StarlikeDomain::from_boundary_file(path)?;
            let name = path
                .file_stem()
                .map_or("boundary".into(), |s| s.to_string_lossy().into_owned());
            let rect = Rect::around(&domain);
            TestDomain { name, domain, rect }
        }
        (None, None) => {
            return Err(Failure::Usage(
                "one of --domain or --boundary-file is required".into(),
            ))
        }
    };
    Ok((domain, function))
}

fn front_shift(domain: &TestDomain, function: TestFunction) -> Result<ShiftParams, Error> {
    // functions without a front borrow the one of f2
    let front = function.front().unwrap_or((0.6, -0.6));
    ShiftParams::at_front(&domain.domain, front)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    match cli.command {
        Command::Domains => {
            let mut out = stdout.lock();
            writeln!(out, "name,x0,x1,y0,y1,rho_min,rho_max")?;
            for name in BUILTIN_NAMES {
                let d = builtin_domain(name)?;
                let r = d.rect;
                writeln!(
                    out,
                    "{name},{},{},{},{},{:.6},{:.6}",
                    r.x0,
                    r.x1,
                    r.y0,
                    r.y1,
                    d.domain.rho_min(),
                    d.domain.rho_max()
                )?;
            }
        }
        Command::Interp(args) => {
            let (domain, function) = load_domain(&args.domain)?;
            let shift = args.shift.resolve(|| front_shift(&domain, function))?;
            let exp = Experiment::new(domain, function).with_shift(shift);
            let (x, y) = args.eval;
            let value =
                with_thread_cap(|| exp.build(args.n1, args.n2).and_then(|di| di.eval(x, y)))?;
            writeln!(stdout.lock(), "{value:e}")?;
            if !value.is_finite() {
                return Err(Failure::Numerical(format!(
                    "interpolant is not finite at ({x}, {y})"
                )));
            }
        }
        Command::Table(args) => {
            let (domain, function) = load_domain(&args.domain)?;
            let shift = args.shift.resolve(|| front_shift(&domain, function))?;
            let mut exp = Experiment::new(domain, function).with_shift(shift);
            exp.lattice = args.lattice;
            let reports = convergence_table(&exp, &args.sizes.0)?;
            let sink: Box<dyn Write> = match &args.out {
                Some(path) => {
                    Box::new(BufWriter::new(File::create(path).map_err(|e| {
                        Failure::Usage(format!("{}: {e}", path.display()))
                    })?))
                }
                None => Box::new(stdout.lock()),
            };
            match args.format {
                Format::Csv => write_csv(&reports, sink, args.timing)?,
                Format::Json => write_json(&reports, sink, args.timing)?,
            }
        }
        Command::Lebesgue(args) => {
            let shift = args.shift.resolve(|| Ok(ShiftParams::disk_default()))?;
            let mut builder = DiskBuilder::new(args.n1, args.n2)?;
            if let Some(p) = shift {
                let (rs, ts) = p.shifts()?;
                builder = builder.radial_shift(Some(rs)).angular_shift(Some(ts));
            }
            let scan = if args.full_scan {
                LebesgueScan::Full
            } else {
                LebesgueScan::Product
            };
            let lam = with_thread_cap(|| {
                let di = builder.sample(|_, _| 0.0)?;
                starbary::lebesgue_estimate_with(di.grid(), args.m1, args.m2, scan)
            })?;
            writeln!(stdout.lock(), "{lam:.9e}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
