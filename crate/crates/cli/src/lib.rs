//! Command-line front end: norms and moments, oracle verification, the
//! reference integrals, zero listings and parameter sweeps.

pub mod args;
pub mod report;

use args::{Cli, Command, ExamplesArgs, FamilyArg, FamilyArgs, FileFormat, Format, IMode, MomentArgs, SweepArgs, ZerosArgs};
use clap::error::ErrorKind;
use clap::Parser;
use ortho_l1::l1rules::{bound, moment, I_MAX};
use ortho_l1::worked::worked_examples;
use ortho_l1::zeros::weighted_monomial_moments;
use ortho_l1::{compute_zeros, gauss_rule_check, oracle_moment, Error, FamilySpec, MomentRequest, N_MAX};
use rayon::prelude::*;
use report::{fmt_real, write_csv, write_json, write_table, Report};
use serde::Serialize;
use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERICAL: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

pub const THREADS_ENV: &str = "ORTHO_L1_THREADS";

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }

    fn io(e: std::io::Error) -> Self {
        Self::new(EXIT_IO, format!("write failed: {e}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Numerical(_) => EXIT_NUMERICAL,
            Error::Domain(_) | Error::Capability(_) | Error::Usage(_) => EXIT_DOMAIN,
        };
        Self::new(code, e.to_string())
    }
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Moment(a) => cmd_moment(&a, out),
        Command::Examples(a) => cmd_examples(&a, out),
        Command::Zeros(a) => cmd_zeros(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
    }
}

fn build_spec(family: FamilyArg, alpha: Option<f64>, beta: Option<f64>) -> Result<FamilySpec, Failure> {
    let missing = |what: &str| Failure::new(EXIT_USAGE, format!("--{what} is required for {family:?}").to_lowercase());
    let extra = |what: &str| Failure::new(EXIT_USAGE, format!("--{what} does not apply to {family:?}").to_lowercase());
    let spec = match family {
        FamilyArg::Laguerre => {
            if beta.is_some() {
                return Err(extra("beta"));
            }
            FamilySpec::laguerre(alpha.ok_or_else(|| missing("alpha"))?)
        }
        FamilyArg::Hermite => {
            if alpha.is_some() {
                return Err(extra("alpha"));
            }
            if beta.is_some() {
                return Err(extra("beta"));
            }
            Ok(FamilySpec::hermite())
        }
        FamilyArg::Jacobi => FamilySpec::jacobi(
            alpha.ok_or_else(|| missing("alpha"))?,
            beta.ok_or_else(|| missing("beta"))?,
        ),
    };
    Ok(spec?)
}

fn family_spec(a: &FamilyArgs) -> Result<FamilySpec, Failure> {
    build_spec(a.family, a.alpha, a.beta)
}

fn check_tol(tol: f64) -> Result<(), Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::new(EXIT_USAGE, format!("--tol must be a positive number, got {tol}")))
    }
}

/// What to compute for one row.
#[derive(Clone, Copy, Debug)]
struct Job {
    spec: FamilySpec,
    n: usize,
    i: usize,
    formula: bool,
    oracle: bool,
    ledger: bool,
}

fn validate(job: &Job) -> Result<(), Failure> {
    if job.formula {
        MomentRequest::new(job.spec, job.n, job.i).map_err(|e| match e {
            Error::Usage(m) => Failure::new(EXIT_DOMAIN, format!("{m} (pass --oracle-only)")),
            other => other.into(),
        })?;
    } else {
        if job.n > N_MAX {
            return Err(Error::Capability(format!("degree {} exceeds N_MAX = {N_MAX}", job.n)).into());
        }
        if job.i > I_MAX {
            return Err(Error::Capability(format!("moment order {} exceeds {I_MAX}", job.i)).into());
        }
    }
    Ok(())
}

fn evaluate(job: &Job) -> Result<Report, Error> {
    let start = Instant::now();
    let (formula, bound_value, ledger) = if job.formula {
        let req = MomentRequest::new(job.spec, job.n, job.i)?;
        let l = moment(&req)?;
        (Some(l.total), bound(&req)?, job.ledger.then_some(l))
    } else {
        (None, None, None)
    };
    let ns = start.elapsed().as_nanos() as u64;
    let oracle = if job.oracle {
        Some(oracle_moment(&job.spec, job.n, job.i)?.value)
    } else {
        None
    };
    let rel_disc = match (formula, oracle) {
        (Some(f), Some(o)) => Some(if o != 0.0 { ((f - o) / o).abs() } else { f.abs() }),
        _ => None,
    };
    Ok(Report {
        family: job.spec,
        n: job.n,
        i: job.i,
        formula,
        oracle,
        bound: bound_value,
        rel_disc,
        ns,
        ledger: ledger.map(|l| l.clone()),
    })
}

fn emit(format: Format, reports: &[Report], out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Json => write_json(out, reports),
        Format::Csv => write_csv(&mut *out, reports),
        Format::Table => write_table(out, reports),
    }
    .map_err(Failure::io)
}

fn verification_code(reports: &[Report], tol: f64) -> i32 {
    let failed = reports.iter().any(|r| r.rel_disc.is_some_and(|d| !(d <= tol)));
    if failed {
        EXIT_VERIFY
    } else {
        EXIT_OK
    }
}

pub fn cmd_moment(a: &MomentArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    check_tol(a.tol)?;
    let spec = family_spec(&a.family)?;
    let jobs: Vec<Job> = a
        .n
        .iter()
        .flat_map(|&n| {
            a.i.iter().map(move |&i| Job {
                spec,
                n,
                i,
                formula: !a.oracle_only,
                oracle: a.verify || a.oracle_only,
                ledger: a.ledger,
            })
        })
        .collect();
    for job in &jobs {
        validate(job)?;
    }
    let reports = jobs.iter().map(evaluate).collect::<Result<Vec<_>, _>>()?;
    emit(a.format, &reports, out)?;
    Ok(verification_code(&reports, a.tol))
}

#[derive(Serialize)]
struct ExampleRow {
    id: &'static str,
    integral: &'static str,
    exact_text: &'static str,
    formula: serde_json::Number,
    exact: serde_json::Number,
    rel_diff: serde_json::Number,
}

fn num(x: f64) -> serde_json::Number {
    fmt_real(x).parse().expect("finite reals format as JSON numbers")
}

pub fn cmd_examples(a: &ExamplesArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    check_tol(a.tol)?;
    let mut rows = Vec::new();
    for ex in worked_examples() {
        let f = ex.formula_value()?;
        rows.push((ex, f));
    }
    let rel = |ex: &ortho_l1::worked::WorkedExample, f: f64| ((f - ex.exact) / ex.exact).abs();
    let io = |r: std::io::Result<()>| r.map_err(Failure::io);
    match a.format {
        Format::Json => {
            for (ex, f) in &rows {
                let row = ExampleRow {
                    id: ex.id,
                    integral: ex.integral,
                    exact_text: ex.exact_text,
                    formula: num(*f),
                    exact: num(ex.exact),
                    rel_diff: num(rel(ex, *f)),
                };
                io(writeln!(out, "{}", serde_json::to_string(&row).expect("serializable")))?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let rec = |w: &mut csv::Writer<_>, r: [&str; 6]| w.write_record(r).map_err(|e| Failure::io(e.into()));
            rec(&mut w, ["id", "integral", "exact_text", "formula", "exact", "rel_diff"])?;
            for (ex, f) in &rows {
                let (fs, es, rs) = (fmt_real(*f), fmt_real(ex.exact), fmt_real(rel(ex, *f)));
                rec(&mut w, [ex.id, ex.integral, ex.exact_text, &fs, &es, &rs])?;
            }
            io(w.flush())?;
        }
        Format::Table => {
            io(writeln!(out, "{:<22} {:>24} {:>24} {:>9}  exact", "id", "formula", "exact", "rel_diff"))?;
            for (ex, f) in &rows {
                io(writeln!(
                    out,
                    "{:<22} {:>24} {:>24} {:>9.2e}  {}  [{}]",
                    ex.id,
                    fmt_real(*f),
                    fmt_real(ex.exact),
                    rel(ex, *f),
                    ex.exact_text,
                    ex.integral
                ))?;
            }
        }
    }
    let ok = rows.iter().all(|(ex, f)| rel(ex, *f) <= a.tol);
    Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
}

#[derive(Serialize)]
struct ZerosJson {
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<serde_json::Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta: Option<serde_json::Number>,
    n: usize,
    n0: usize,
    zeros: Vec<serde_json::Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    christoffel: Option<Vec<serde_json::Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gauss_max_rel: Option<serde_json::Number>,
}

/// Largest relative error of the Gauss rule over the monomials `t^k`,
/// `k <= 2n-1`, skipping the odd moments that vanish.
fn gauss_self_check(spec: &FamilySpec, n: usize) -> Result<f64, Error> {
    let exact = weighted_monomial_moments(spec, 2 * n - 1);
    let mut worst = 0.0f64;
    for (k, m) in exact.iter().enumerate() {
        let mut c = vec![0.0; k + 1];
        c[k] = 1.0;
        let (q, e) = gauss_rule_check(spec, n, &c)?;
        let d = if *m == 0.0 { q.abs() } else { ((q - e) / e).abs() };
        worst = worst.max(d);
    }
    Ok(worst)
}

pub fn cmd_zeros(a: &ZerosArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = family_spec(&a.family)?;
    let zs = compute_zeros(&spec, a.n)?;
    let check = if a.christoffel {
        Some(gauss_self_check(&spec, a.n)?)
    } else {
        None
    };
    let io = |r: std::io::Result<()>| r.map_err(Failure::io);
    match a.format {
        Format::Json => {
            let row = ZerosJson {
                family: spec.name(),
                alpha: spec.alpha().map(num),
                beta: spec.beta().map(num),
                n: zs.n,
                n0: zs.n0,
                zeros: zs.zeros.iter().map(|&t| num(t)).collect(),
                christoffel: a.christoffel.then(|| zs.christoffel.iter().map(|&w| num(w)).collect()),
                gauss_max_rel: check.map(num),
            };
            io(writeln!(out, "{}", serde_json::to_string(&row).expect("serializable")))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let header: &[&str] = if a.christoffel { &["index", "zero", "christoffel"] } else { &["index", "zero"] };
            w.write_record(header).map_err(|e| Failure::io(e.into()))?;
            for (j, t) in zs.zeros.iter().enumerate() {
                let mut rec = vec![(j + 1).to_string(), fmt_real(*t)];
                if a.christoffel {
                    rec.push(fmt_real(zs.christoffel[j]));
                }
                w.write_record(&rec).map_err(|e| Failure::io(e.into()))?;
            }
            io(w.flush())?;
        }
        Format::Table => {
            io(writeln!(out, "{} n={} n0={}", spec.name(), zs.n, zs.n0))?;
            for (j, t) in zs.zeros.iter().enumerate() {
                if a.christoffel {
                    io(writeln!(out, "{:>4} {:>25} {:>25}", j + 1, fmt_real(*t), fmt_real(zs.christoffel[j])))?;
                } else {
                    io(writeln!(out, "{:>4} {:>25}", j + 1, fmt_real(*t)))?;
                }
            }
            if let Some(c) = check {
                io(writeln!(out, "gauss exactness, max relative error over t^k (k <= {}): {c:.2e}", 2 * zs.n - 1))?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Thread count from `ORTHO_L1_THREADS`, `None` for the rayon default.
pub fn thread_limit() -> Result<Option<usize>, Failure> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(Failure::new(
                EXIT_USAGE,
                format!("{THREADS_ENV} must be a positive integer, got {v:?}"),
            )),
        },
    }
}

fn sweep_specs(a: &SweepArgs) -> Result<Vec<FamilySpec>, Failure> {
    let mut alphas = a.alpha.clone();
    let mut betas = a.beta.clone();
    alphas.sort_by(f64::total_cmp);
    alphas.dedup();
    betas.sort_by(f64::total_cmp);
    betas.dedup();
    let opts = |v: Vec<f64>| -> Vec<Option<f64>> {
        if v.is_empty() {
            vec![None]
        } else {
            v.into_iter().map(Some).collect()
        }
    };
    let mut specs = Vec::new();
    for alpha in opts(alphas) {
        for &beta in &opts(betas.clone()) {
            specs.push(build_spec(a.family, alpha, beta)?);
        }
    }
    Ok(specs)
}

pub fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    check_tol(a.tol)?;
    if a.n_max == 0 {
        return Err(Failure::new(EXIT_USAGE, "--n-max must be >= 1"));
    }
    let threads = thread_limit()?;
    let specs = sweep_specs(a)?;
    let mut jobs = Vec::new();
    for spec in specs {
        for n in 1..=a.n_max {
            let orders: Vec<usize> = match a.i_mode {
                IMode::All => (0..n.min(I_MAX + 1)).collect(),
                IMode::Zero => vec![0],
                IMode::Top => vec![n - 1],
            };
            for i in orders {
                jobs.push(Job {
                    spec,
                    n,
                    i,
                    formula: true,
                    oracle: a.verify,
                    ledger: false,
                });
            }
        }
    }
    for job in &jobs {
        validate(job)?;
    }
    let compute = || jobs.par_iter().map(evaluate).collect::<Result<Vec<_>, _>>();
    let reports = match threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map_err(|e| Failure::new(EXIT_NUMERICAL, format!("thread pool: {e}")))?
            .install(compute),
        None => compute(),
    }?;
    let file = File::create(&a.out)
        .map_err(|e| Failure::new(EXIT_IO, format!("cannot write {}: {e}", a.out.display())))?;
    let mut w = BufWriter::new(file);
    match a.format {
        FileFormat::Csv => write_csv(&mut w, &reports),
        FileFormat::Json => write_json(&mut w, &reports),
    }
    .and_then(|_| w.flush())
    .map_err(|e| Failure::new(EXIT_IO, format!("cannot write {}: {e}", a.out.display())))?;
    let code = verification_code(&reports, a.tol);
    writeln!(
        out,
        "wrote {} rows to {}{}",
        reports.len(),
        a.out.display(),
        if code == EXIT_VERIFY { " (verification failures)" } else { "" }
    )
    .map_err(Failure::io)?;
    Ok(code)
}
