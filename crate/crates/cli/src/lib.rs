//! Command-line front end for the `gaussint` library.
//!
//! [`run`] parses an argument list, evaluates it and renders the records;
//! `main` only wires it to the process streams.

mod commands;
pub mod record;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use record::{ExactValue, OutputRecord};

/// Default tolerance for every numeric route.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Environment variable overriding CSV float precision.
pub const CSV_DIGITS_ENV: &str = "GAUSSINT_CSV_DIGITS";
const DEFAULT_CSV_DIGITS: usize = 17;

#[derive(Debug, Parser)]
#[command(name = "gaussint", version, about = "Gaussian moment integrals, half-integer gamma values, Tsallis densities and fractional derivatives")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write records to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaussian moment ∫ x^(2n) e^(−αx²) dx over the real line.
    Moment(MomentArgs),
    /// The exact coefficient γ₂ₙ.
    GammaCoef(GammaCoefArgs),
    /// Half-integer gamma, factorials, numeric gamma and ₂F₁.
    #[command(subcommand)]
    Special(SpecialCmd),
    /// Tsallis entropy, occupation numbers and number density.
    #[command(subcommand)]
    Tsallis(TsallisCmd),
    /// Fractional derivatives.
    #[command(subcommand)]
    Frac(FracCmd),
    /// Closed form vs quadrature over a grid of n or α.
    #[command(subcommand)]
    Table(TableCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MomentMethodArg {
    Closed,
    GammaForm,
    Quadrature,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = MomentMethodArg::Closed)]
    pub method: MomentMethodArg,
    #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
    pub tol: f64,
    /// Use the odd integrand x^(2n+1) instead (zero by symmetry).
    #[arg(long)]
    pub odd: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoefPath {
    Product,
    Recurrence,
    DoubleFactorial,
    Jet,
}

#[derive(Debug, Args)]
pub struct GammaCoefArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = CoefPath::Product)]
    pub path: CoefPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HalfSign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Hyp2F1Method {
    Series,
    Integral,
}

#[derive(Debug, Subcommand)]
pub enum SpecialCmd {
    /// Γ(1/2 + n) or Γ(1/2 − n), exactly.
    GammaHalf {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = HalfSign::Plus)]
        sign: HalfSign,
    },
    /// x! = Γ(x + 1); exact at integers and half-integers.
    Factorial {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
        tol: f64,
    },
    /// Γ(t); exact at integers and half-integers.
    Gamma {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
        tol: f64,
    },
    /// Gauss hypergeometric ₂F₁(a, b; c; z).
    Hyp2f1 {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long, allow_hyphen_values = true)]
        b: f64,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[arg(long, value_enum, default_value_t = Hyp2F1Method::Series)]
        method: Hyp2F1Method,
        #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
        tol: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    Natural,
    Si,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DensityRoute {
    Closed,
    Quadrature,
}

/// One particle species at temperature T; energies share the units of k_B·T.
#[derive(Debug, Args)]
pub struct SpeciesArgs {
    #[arg(long, default_value_t = 1.0)]
    pub g: f64,
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub temperature: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub q: f64,
}

#[derive(Debug, Subcommand)]
pub enum TsallisCmd {
    /// S_q = (1 − Σ pᵢ^q)/(q − 1), in units of k_B.
    Entropy {
        /// Comma-separated probabilities summing to 1.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        q: f64,
    },
    /// Mean occupation of a state at energy E.
    Occupation {
        #[arg(long, allow_hyphen_values = true)]
        energy: f64,
        #[command(flatten)]
        species: SpeciesArgs,
    },
    /// Number density: closed form against the term-by-term momentum integral.
    Density {
        #[command(flatten)]
        species: SpeciesArgs,
        #[arg(long, value_enum, default_value_t = Units::Natural)]
        units: Units,
        /// How the momentum moments inside the integral are evaluated.
        #[arg(long, value_enum, default_value_t = DensityRoute::Quadrature)]
        route: DensityRoute,
        #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
        tol: f64,
    },
}

#[derive(Debug, Subcommand)]
pub enum FracCmd {
    /// Power rule D^α t^θ = Γ(θ+1)/Γ(θ−α+1) t^(θ−α).
    Power {
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        /// Integer order of the outer derivative; defaults to ⌈α⌉.
        #[arg(long)]
        m: Option<u32>,
        /// Evaluate the derivative at this point as well.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<f64>,
    },
    /// k-th derivative of 1/(1−x) at 0 via truncated power series.
    Reciprocal {
        #[arg(long)]
        k: u32,
    },
    /// Riemann–Liouville derivative of order n+1/2 of 1/(1−x).
    Rl(HalfOrderArgs),
    /// Caputo derivative of order n+1/2 of 1/(1−x).
    Caputo(HalfOrderArgs),
    /// Regularized order-(n+1/2) derivative of 1/(1−x) at 0.
    Regularized {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Args)]
pub struct HalfOrderArgs {
    #[arg(long)]
    pub n: u32,
    /// Integer order of the outer derivative; defaults to n + 1.
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
}

#[derive(Debug, Subcommand)]
pub enum TableCmd {
    /// Sweep n = 0..=max at fixed α.
    N {
        #[arg(long)]
        max: u32,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
        tol: f64,
    },
    /// Sweep α over `steps` evenly spaced points in [from, to] at fixed n.
    Alpha {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 5)]
        steps: u32,
        #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
        tol: f64,
    },
}

/// What a run produced: exit status plus the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(message: impl std::fmt::Display) -> Self {
        Outcome {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn csv_digits(raw: Option<String>) -> Result<usize, String> {
    match raw {
        None => Ok(DEFAULT_CSV_DIGITS),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(d) if (1..=17).contains(&d) => Ok(d),
            _ => Err(format!("{CSV_DIGITS_ENV} must be an integer in 1..=17, got {s:?}")),
        },
    }
}

/// Parses and executes `argv` (program name first). With `--out`, records go
/// to the file and stdout stays empty.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_digits(argv, std::env::var(CSV_DIGITS_ENV).ok())
}

/// [`run`] with the CSV precision override passed explicitly.
pub fn run_with_digits<I, T>(argv: I, digits_override: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    status: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            return Outcome::failure(first.trim_start_matches("error: "));
        }
    };
    let records = match commands::execute(&cli.command) {
        Ok(r) => r,
        Err(e) => return Outcome::failure(e),
    };
    let text = match cli.format {
        Format::Json => record::render_json(&records),
        Format::Csv => match csv_digits(digits_override) {
            Ok(d) => record::render_csv(&records, d),
            Err(msg) => return Outcome::failure(msg),
        },
    };
    match &cli.out {
        Some(path) => match std::fs::File::create(path).and_then(|mut f| f.write_all(text.as_bytes())) {
            Ok(()) => Outcome {
                status: 0,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::failure(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            status: 0,
            stdout: text,
            stderr: String::new(),
        },
    }
}
