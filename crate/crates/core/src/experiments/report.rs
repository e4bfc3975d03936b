//! Error measurement on a rectangle lattice and convergence tables.

use std::io::Write;
use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::domains::{Rect, ShiftParams, TestDomain};
use super::functions::TestFunction;
use crate::error::{invalid, Error, Result};
use crate::starlike::{build_domain_interpolant, DomainInterpolant};

/// Lattice points per axis.
pub const DEFAULT_LATTICE: usize = 170;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "STARBARY_THREADS";

/// Runs `op` on a pool limited to `$STARBARY_THREADS` workers, or on the
/// global pool when the variable is unset or not a positive integer.
pub fn with_thread_cap<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    let pool = POOL.get_or_init(|| {
        let n: usize = std::env::var(THREADS_ENV)
            .ok()?
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()
    });
    match pool {
        Some(p) => p.install(op),
        None => op(),
    }
}

/// Largest error over the lattice points inside the domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridError {
    /// `+∞` when the interpolant produced a non-finite value anywhere.
    pub max_abs_error: f64,
    pub points: usize,
}

/// `m` equally spaced values from `a` to `b`, both included.
pub fn lattice_axis(a: f64, b: f64, m: usize) -> Vec<f64> {
    (0..m)
        .map(|k| {
            if k + 1 == m {
                b
            } else {
                a + (b - a) * k as f64 / (m - 1) as f64
            }
        })
        .collect()
}

/// Maximum of `|f - I[f]|` over the `m × m` lattice on `rect` (corners
/// included), restricted to points inside the domain.
pub fn error_on_grid<F>(di: &DomainInterpolant, f: F, rect: &Rect, m: usize) -> Result<GridError>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    if m < 2 {
        return Err(invalid("evaluation lattice needs m >= 2"));
    }
    let xs = lattice_axis(rect.x0, rect.x1, m);
    let ys = lattice_axis(rect.y0, rect.y1, m);
    let dom = di.domain();
    let rows: Vec<(f64, usize)> = ys
        .par_iter()
        .map(|&y| {
            let mut worst = 0.0f64;
            let mut count = 0;
            for &x in &xs {
                if !dom.contains(x, y) {
                    continue;
                }
                count += 1;
                let err = match di.eval(x, y) {
                    Ok(v) => (f(x, y) - v).abs(),
                    Err(_) => f64::INFINITY,
                };
                worst = worst.max(if err.is_nan() { f64::INFINITY } else { err });
            }
            (worst, count)
        })
        .collect();
    let points: usize = rows.iter().map(|r| r.1).sum();
    if points == 0 {
        return Err(Error::EmptyGrid);
    }
    let max_abs_error = rows.iter().map(|r| r.0).fold(0.0, f64::max);
    Ok(GridError {
        max_abs_error,
        points,
    })
}

fn finite_or_inf<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else {
        s.serialize_str("Inf")
    }
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub n1: usize,
    pub n2: usize,
    pub domain: String,
    pub function: String,
    pub shifted: bool,
    pub shift: Option<ShiftParams>,
    #[serde(serialize_with = "finite_or_inf")]
    pub max_abs_error: f64,
    pub finite: bool,
    pub points_evaluated: usize,
    pub elapsed_s: f64,
}

/// One domain, function and shift configuration, run at several grid sizes.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub domain: TestDomain,
    pub function: TestFunction,
    pub shift: Option<ShiftParams>,
    pub lattice: usize,
}

impl Experiment {
    pub fn new(domain: TestDomain, function: TestFunction) -> Self {
        Self {
            domain,
            function,
            shift: None,
            lattice: DEFAULT_LATTICE,
        }
    }

    pub fn with_shift(mut self, shift: Option<ShiftParams>) -> Self {
        self.shift = shift;
        self
    }

    pub fn build(&self, n1: usize, n2: usize) -> Result<DomainInterpolant> {
        let (rs, ts) = match &self.shift {
            Some(p) => {
                let (r, t) = p.shifts()?;
                (Some(r), Some(t))
            }
            None => (None, None),
        };
        let f = self.function;
        build_domain_interpolant(&self.domain.domain, n1, n2, rs, ts, move |x, y| {
            f.eval(x, y)
        })
    }

    pub fn run(&self, n1: usize, n2: usize) -> Result<ErrorReport> {
        with_thread_cap(|| {
            let start = Instant::now();
            let di = self.build(n1, n2)?;
            let f = self.function;
            let err = error_on_grid(
                &di,
                move |x, y| f.eval(x, y),
                &self.domain.rect,
                self.lattice,
            )?;
            let elapsed_s = start.elapsed().as_secs_f64();
            log::info!(
                "{} {} ({n1}, {n2}): max error {:e} over {} points",
                self.domain.name,
                self.function,
                err.max_abs_error,
                err.points
            );
            Ok(ErrorReport {
                n1,
                n2,
                domain: self.domain.name.clone(),
                function: self.function.name().to_string(),
                shifted: self.shift.is_some(),
                shift: self.shift,
                max_abs_error: err.max_abs_error,
                finite: err.max_abs_error.is_finite(),
                points_evaluated: err.points,
                elapsed_s,
            })
        })
    }
}

/// One report per size, in order.
pub fn convergence_table(exp: &Experiment, sizes: &[(usize, usize)]) -> Result<Vec<ErrorReport>> {
    if sizes.is_empty() {
        return Err(invalid("convergence table needs at least one grid size"));
    }
    sizes.iter().map(|&(n1, n2)| exp.run(n1, n2)).collect()
}

pub const CSV_HEADER: &str = "n1,n2,domain,function,shifted,max_abs_error,points,elapsed_s";

/// Scientific notation with 10 significant digits; non-finite as `Inf`.
pub fn format_error(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.9e}")
    } else {
        "Inf".to_string()
    }
}

/// Writes the table as CSV. Without `timing` the elapsed column holds `NA`,
/// which keeps repeated runs byte-identical.
pub fn write_csv(
    reports: &[ErrorReport],
    mut out: impl Write,
    timing: bool,
) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in reports {
        let elapsed = if timing {
            format!("{:.3}", r.elapsed_s)
        } else {
            "NA".to_string()
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.n1,
            r.n2,
            r.domain,
            r.function,
            r.shifted,
            format_error(r.max_abs_error),
            r.points_evaluated,
            elapsed
        )?;
    }
    Ok(())
}

/// Writes the table as a pretty-printed JSON array. Without `timing` the
/// elapsed times are zeroed.
pub fn write_json(
    reports: &[ErrorReport],
    mut out: impl Write,
    timing: bool,
) -> std::io::Result<()> {
    let rows: Vec<ErrorReport> = reports
        .iter()
        .cloned()
        .map(|mut r| {
            if !timing {
                r.elapsed_s = 0.0;
            }
            r
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)
}
