//! `oscq` — Fourier sine/cosine transforms by transformation-based
//! trapezoidal/midpoint quadrature, plus the error tables of the
//! Lorentzian model problem as CSV.
//!
//! Exit codes: 0 success, 2 usage error (bad flags, bad integrand
//! syntax, invalid parameter combinations), 3 numerical failure.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use oscq_core::{
    choose_m, cosine_transform, decompose_error, default_n, sine_transform, IntegrandSpec,
    LorentzianParams, OscqError, QuadratureParams, TransformMap,
};

#[derive(Parser)]
#[command(name = "oscq", version, about = "Oscillatory quadrature for half-line Fourier transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Error decomposition table for the Lorentzian model problem
    /// (t = 1, b = 1, a in {-1, 0, 1}, m = 1..10) as CSV.
    Table1(Table1Args),
    /// Matched-parameter convergence study: one row per n with
    /// m = sqrt(n*pi/alpha) and the absolute error against the
    /// closed-form reference.
    Convergence(ConvergenceArgs),
    /// Single- vs double-exponential comparison on the sinc integrand.
    CompareOm(CompareOmArgs),
    /// Evaluate one sine (default) or cosine transform.
    Transform(TransformArgs),
}

#[derive(Args)]
struct Table1Args {
    /// Output CSV path.
    #[arg(long)]
    out: String,
}

#[derive(Args)]
struct ConvergenceArgs {
    /// Integrand: lorentzian:a=A,b=B | sinc | expdecay:lambda=L
    #[arg(long)]
    integrand: String,
    /// Transform frequency t > 0.
    #[arg(long)]
    t: f64,
    /// Discretisation decay rate alpha in e^{-alpha m}.
    #[arg(long)]
    alpha: f64,
    /// Comma-separated truncation indices (default: squares 16..400).
    #[arg(long = "n-list")]
    n_list: Option<String>,
    /// Output CSV path.
    #[arg(long)]
    out: String,
}

#[derive(Args)]
struct CompareOmArgs {
    /// Output CSV path.
    #[arg(long)]
    out: String,
}

#[derive(Args)]
struct TransformArgs {
    /// Integrand: lorentzian:a=A,b=B | sinc | expdecay:lambda=L
    #[arg(long)]
    integrand: String,
    /// Transform frequency t > 0.
    #[arg(long)]
    t: f64,
    /// Rule parameter m (stepsize pi/m). Default n is ceil(4 m^2).
    #[arg(long)]
    m: Option<f64>,
    /// Truncation index n; with --alpha determines m when --m is absent.
    #[arg(long)]
    n: Option<usize>,
    /// Decay rate for the m = sqrt(n*pi/alpha) matching.
    #[arg(long)]
    alpha: Option<f64>,
    /// Use the midpoint rule for the cosine transform.
    #[arg(long)]
    cosine: bool,
    /// Transformation map: se | om1 | om2.
    #[arg(long, default_value = "se")]
    map: String,
}

enum CliError {
    Usage(String),
    Numerical(String),
}

impl From<OscqError> for CliError {
    fn from(e: OscqError) -> Self {
        match e {
            OscqError::Domain(_) | OscqError::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Numerical(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table1(args) => cmd_table1(&args),
        Command::Convergence(args) => cmd_convergence(&args),
        Command::CompareOm(args) => cmd_compare_om(&args),
        Command::Transform(args) => cmd_transform(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn parse_integrand(s: &str) -> Result<IntegrandSpec, CliError> {
    let lower = s.to_ascii_lowercase();
    let (name, params) = match lower.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (lower.as_str(), None),
    };
    let mut kv = std::collections::BTreeMap::new();
    if let Some(p) = params {
        for item in p.split(',') {
            let (k, v) = item.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("bad integrand parameter '{item}', expected key=value"))
            })?;
            let val: f64 = v
                .parse()
                .map_err(|_| CliError::Usage(format!("bad numeric value '{v}' in integrand")))?;
            kv.insert(k.to_string(), val);
        }
    }
    let take = |kv: &std::collections::BTreeMap<String, f64>, key: &str| {
        kv.get(key)
            .copied()
            .ok_or_else(|| CliError::Usage(format!("integrand '{name}' needs parameter '{key}'")))
    };
    match name {
        "lorentzian" => {
            let a = take(&kv, "a")?;
            let b = take(&kv, "b")?;
            Ok(IntegrandSpec::lorentzian(a, b)?)
        }
        "sinc" => Ok(IntegrandSpec::sinc()),
        "expdecay" => Ok(IntegrandSpec::exp_decay(take(&kv, "lambda")?)?),
        _ => Err(CliError::Usage(format!(
            "unknown integrand '{name}' (expected lorentzian, sinc or expdecay)"
        ))),
    }
}

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn cmd_table1(args: &Table1Args) -> Result<(), CliError> {
    let mut out = BufWriter::new(File::create(&args.out)?);
    writeln!(out, "m,a,total,R_m,S_m,saddle_converged")?;
    for m in 1..=10 {
        for a in [-1.0, 0.0, 1.0] {
            let p = LorentzianParams::new(a, 1.0, 1.0)?;
            let d = decompose_error(&p, m as f64)?;
            let saddle = d.saddle_term.map(fmt).unwrap_or_default();
            writeln!(
                out,
                "{m},{a},{},{},{saddle},{}",
                fmt(d.total),
                fmt(d.pole_term),
                d.saddle_converged
            )?;
        }
    }
    out.flush()?;
    Ok(())
}

fn default_n_list() -> Vec<usize> {
    (4..=20).map(|k| k * k).collect()
}

fn cmd_convergence(args: &ConvergenceArgs) -> Result<(), CliError> {
    let spec = parse_integrand(&args.integrand)?;
    let ns = match &args.n_list {
        Some(s) => s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad n value '{x}'")))
            })
            .collect::<Result<Vec<_>, _>>()?,
        None => default_n_list(),
    };
    let reference = spec.reference_sine(args.t)?;
    let mut out = BufWriter::new(File::create(&args.out)?);
    writeln!(out, "n,m,abs_error")?;
    for n in ns {
        let m = choose_m(n, args.alpha)?;
        let params = QuadratureParams::new(m, n, args.t)?;
        let v = sine_transform(&spec, &TransformMap::single_exp(), &params)?;
        writeln!(out, "{n},{},{}", fmt(m), fmt((reference - v).abs()))?;
    }
    out.flush()?;
    Ok(())
}

/// m for the first Ooura–Mori map at node count n: the double-exponential
/// truncation rate balances the discretisation rate when m·log m = n·π.
fn om1_matched_m(n: usize) -> f64 {
    let target = n as f64 * std::f64::consts::PI;
    let mut m = target / target.ln();
    for _ in 0..60 {
        m = target / m.ln();
    }
    m
}

fn cmd_compare_om(args: &CompareOmArgs) -> Result<(), CliError> {
    let spec = IntegrandSpec::sinc();
    let reference = std::f64::consts::PI / 2.0;
    let mut out = BufWriter::new(File::create(&args.out)?);
    writeln!(out, "# integrand sin(x)/x, t = 1")?;
    writeln!(out, "# se: trapezoidal rule, m = sqrt(n*pi/alpha) with alpha = pi")?;
    writeln!(out, "# om1: same rule and node count, K = 2*pi, m solving m*log(m) = n*pi")?;
    writeln!(out, "n,err_se,err_om1")?;
    for n in [8usize, 16, 32, 64, 128, 256, 512] {
        let m_se = choose_m(n, std::f64::consts::PI)?;
        let v_se = sine_transform(
            &spec,
            &TransformMap::single_exp(),
            &QuadratureParams::new(m_se, n, 1.0)?,
        )?;
        let m_om = om1_matched_m(n);
        let v_om = sine_transform(
            &spec,
            &TransformMap::ooura_mori_1(),
            &QuadratureParams::new(m_om, n, 1.0)?,
        )?;
        writeln!(
            out,
            "{n},{},{}",
            fmt((reference - v_se).abs()),
            fmt((reference - v_om).abs())
        )?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_transform(args: &TransformArgs) -> Result<(), CliError> {
    let spec = parse_integrand(&args.integrand)?;
    let (m, n) = match (args.m, args.n, args.alpha) {
        (Some(m), n, _) => (m, n.unwrap_or_else(|| default_n(m))),
        (None, Some(n), Some(alpha)) => (choose_m(n, alpha)?, n),
        (None, Some(_), None) => {
            return Err(CliError::Usage(
                "--n without --m needs --alpha to determine m".into(),
            ))
        }
        (None, None, _) => {
            return Err(CliError::Usage("supply --m or (--n and --alpha)".into()))
        }
    };
    let map = match args.map.as_str() {
        "se" => TransformMap::single_exp(),
        "om1" => TransformMap::ooura_mori_1(),
        "om2" => TransformMap::ooura_mori_2(m)?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown map '{other}' (expected se, om1 or om2)"
            )))
        }
    };
    let params = QuadratureParams::new(m, n, args.t)?;
    // a missing closed form is fine (no error line); a failing one is not
    let keep_known = |r: Result<f64, OscqError>| match r {
        Ok(v) => Ok(Some(v)),
        Err(OscqError::Unsupported(_)) => Ok(None),
        Err(e) => Err(CliError::Numerical(e.to_string())),
    };
    let (value, reference) = if args.cosine {
        (
            cosine_transform(&spec, &map, &params)?,
            keep_known(spec.reference_cosine(args.t))?,
        )
    } else {
        (
            sine_transform(&spec, &map, &params)?,
            keep_known(spec.reference_sine(args.t))?,
        )
    };
    println!("{}", fmt(value));
    if let Some(r) = reference {
        println!("abs_error {}", fmt((r - value).abs()));
    }
    Ok(())
}
