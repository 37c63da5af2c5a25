//! Command-line front end.
//!
//! Exit codes: 0 when every requested check passes, 1 when one fails, 2 on
//! usage errors and 3 on IO errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{AlgebraJson, FormJson};
use crate::error::Error;
use crate::quantum::{build_q_algebra, derive_q_cg_spin1};
use crate::scalar::rational::parse_rational;
use crate::scalar::{QRadical, Radical};
use crate::suite::{build, run_suite, Construction, RunOptions, Suite};
use crate::wigner::{cg, CGKey, HalfInt};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "CGALG_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cgalg",
    version,
    about = "Exact Clebsch-Gordan algebras and their identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the multiplication table of a construction.
    Build(BuildArgs),
    /// Run identity checks and report PASS/FAIL with witnesses.
    Verify(VerifyArgs),
    /// Print the q-deformed spin-1 table and its bilinear form.
    Qtable(QtableArgs),
    /// Print C(j1 j2 j3; m1 m2 m3).
    Cg(CgArgs),
    /// Write the structure constants of a construction as JSON.
    Export(BuildArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(value_parser = parse_construction)]
    pub construction: Construction,
    /// Normalization of the spin constructions, as `p` or `p/q`.
    #[arg(long, value_parser = parse_b, default_value = "1")]
    pub b: Radical,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_construction)]
    pub construction: Option<Construction>,
    /// Defaults to the suite of `--construction`, or `all`.
    #[arg(long, value_parser = parse_suite)]
    pub suite: Option<Suite>,
    /// Perturb one structure constant, chosen from this seed, before checking.
    #[arg(long, value_name = "SEED")]
    pub fuzz: Option<u64>,
    /// Number of sampled values of t for the quantum cross-check.
    #[arg(long = "t-sample", value_name = "N", default_value_t = 5)]
    pub t_sample: usize,
    /// Seed for the sampled values of t.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_parser = parse_b, default_value = "1")]
    pub b: Radical,
    /// Write the full report as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QtableArgs {
    /// Show the table derived from the tensor square instead of the reference one.
    #[arg(long)]
    pub derived: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CgArgs {
    #[arg(allow_hyphen_values = true)]
    pub j1: String,
    #[arg(allow_hyphen_values = true)]
    pub j2: String,
    #[arg(allow_hyphen_values = true)]
    pub j3: String,
    #[arg(allow_hyphen_values = true)]
    pub m1: String,
    #[arg(allow_hyphen_values = true)]
    pub m2: String,
    #[arg(allow_hyphen_values = true)]
    pub m3: String,
}

fn parse_construction(s: &str) -> Result<Construction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_b(s: &str) -> Result<Radical, String> {
    parse_rational(s).map(Radical::from_rational).map_err(|e| e.to_string())
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidSpin(_) | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &[u8]) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s.into_bytes()
}

/// Sets the rayon pool size from [`THREADS_VAR`] when it is present.
fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Failure::Usage(format!("{THREADS_VAR} must be a positive integer, got {value:?}")))?;
    // a pool configured earlier in the same process wins
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = configure_threads().and_then(|()| dispatch(cli.command, out));
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Io(m)) => {
            let _ = writeln!(err, "io error: {m}");
            EXIT_IO
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAIL
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Build(a) => {
            let built = build(a.construction, &a.b)?;
            if let Some(path) = &a.out {
                write_atomic(path, &to_json(&built.to_json(a.construction)))?;
            }
            writeln!(out, "{} ({} dimensions)", a.construction, built.dim())?;
            write!(out, "{}", built.table())?;
            Ok(EXIT_PASS)
        }
        Command::Export(a) => {
            let json = to_json(&build(a.construction, &a.b)?.to_json(a.construction));
            match &a.out {
                Some(path) => write_atomic(path, &json)?,
                None => out.write_all(&json)?,
            }
            Ok(EXIT_PASS)
        }
        Command::Verify(a) => verify(a, out),
        Command::Qtable(a) => qtable(a, out),
        Command::Cg(a) => {
            let h = |s: &str| s.parse::<HalfInt>();
            let key = CGKey {
                j1: h(&a.j1)?,
                j2: h(&a.j2)?,
                j3: h(&a.j3)?,
                m1: h(&a.m1)?,
                m2: h(&a.m2)?,
                m3: h(&a.m3)?,
            };
            writeln!(out, "{}", cg(&key)?)?;
            Ok(EXIT_PASS)
        }
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let suite = a.suite.or(a.construction.map(|c| c.suite())).unwrap_or(Suite::All);
    if let Some(c) = a.construction {
        if !suite.contains(c) {
            return Err(Failure::Usage(format!("{c} is not part of the {suite} suite")));
        }
    }
    let opts = RunOptions {
        b: a.b,
        t_samples: a.t_sample,
        seed: a.seed,
        fuzz: a.fuzz,
    };
    let report = run_suite(suite, a.construction, &opts)?;
    if let Some(path) = &a.out {
        write_atomic(path, &to_json(&report))?;
    }
    writeln!(out, "{report}")?;
    let failures: Vec<_> = report.failures().collect();
    if failures.is_empty() {
        writeln!(out, "result: PASS")?;
        return Ok(EXIT_PASS);
    }
    writeln!(out, "result: FAIL")?;
    for r in failures {
        match &r.witness {
            Some(w) => writeln!(
                out,
                "witness {}: [{}] {w}",
                r.name,
                w.indices.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            )?,
            None => writeln!(out, "failed {}: {}", r.name, r.detail)?,
        }
    }
    Ok(EXIT_FAIL)
}

#[derive(Serialize)]
struct QtableJson {
    beta: String,
    algebra: AlgebraJson,
    form: FormJson,
}

fn qtable(a: QtableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let q = build_q_algebra(&QRadical::one());
    let (beta, algebra) = if a.derived {
        let d = derive_q_cg_spin1()?;
        (d.beta, d.algebra)
    } else {
        (q.beta.clone(), q.algebra.clone())
    };
    if let Some(path) = &a.out {
        let json = QtableJson {
            beta: beta.to_string(),
            algebra: (&algebra).into(),
            form: (&q.form).into(),
        };
        write_atomic(path, &to_json(&json))?;
    }
    writeln!(out, "beta = {beta}")?;
    write!(out, "{algebra}")?;
    writeln!(out, "form:")?;
    for i in 0..3 {
        for j in 0..3 {
            let v = q.form.entry(i, j);
            if !v.is_zero() {
                writeln!(out, "B({}, {}) = {v}", q.algebra.label(i), q.algebra.label(j))?;
            }
        }
    }
    Ok(EXIT_PASS)
}
