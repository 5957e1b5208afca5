//! `denumerant`: compute Bernoulli data, partition quasi-polynomials and
//! determinant systems exactly, and verify the identities relating them.
//!
//! Exit status: 0 on success, 1 on a computation error or an asserted
//! mismatch, 2 on a usage error (including exceeded size guards).

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use denumerant::bernoulli::{
    bernoulli_barnes_number, bernoulli_barnes_series, bernoulli_number, bernoulli_poly, bernoulli_poly_eval,
};
use denumerant::detpoly::{
    build_delta_bar_matrix, build_delta_matrix, delta, delta_bar, delta_bar_via_fbar_poly, delta_via_f_poly,
    f1_closed_form, f_poly, fbar_poly, g_poly, gbar_poly, Limits,
};
use denumerant::partition::{
    p_oracle, quasi_from_delta_cramer, quasi_from_delta_system, quasi_from_deltabar_system, quasi_from_oracle,
    PartitionSpec,
};
use denumerant::verify::{run_identity, VerifyParams};
use denumerant::{Error, Rational};

use output::Artifact;

#[derive(Parser)]
#[command(name = "denumerant", version, about = "Exact restricted partition functions and Bernoulli determinants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write the result to this file instead of stdout. Relative paths are
    /// resolved against `--output-dir` when it is set.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    /// Directory for relative `--output` paths.
    #[arg(long, env = "DENUMERANT_OUTPUT_DIR", hide_env_values = true, global = true)]
    output_dir: Option<PathBuf>,

    /// Largest matrix order rD expanded symbolically.
    #[arg(long, default_value_t = Limits::default().symbolic_order, global = true)]
    max_symbolic_order: usize,

    /// Largest matrix order rD evaluated numerically.
    #[arg(long, default_value_t = Limits::default().numeric_order, global = true)]
    max_numeric_order: usize,

    /// Disable all size guards.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Bernoulli number B_j, polynomial B_j(x), or its value at x.
    Bernoulli {
        #[arg(long)]
        j: usize,
        /// Evaluate B_j at this rational instead.
        #[arg(long, allow_hyphen_values = true)]
        x: Option<Rational>,
        /// Emit the coefficients of B_j(x).
        #[arg(long, conflicts_with = "x")]
        poly: bool,
    },
    /// Bernoulli-Barnes number B_j(a).
    Barnes {
        #[arg(long)]
        j: usize,
        /// Positive parts, comma separated.
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        a: Vec<u64>,
        #[arg(long, value_enum, default_value_t = BarnesRoute::Compositions)]
        route: BarnesRoute,
    },
    /// Number of solutions of a_1 x_1 + ... + a_r x_r = n.
    PartitionEval {
        /// Positive parts, comma separated.
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        a: Vec<u64>,
        #[arg(long)]
        n: u64,
        /// Evaluate the interpolated quasi-polynomial instead of counting.
        #[arg(long)]
        quasi: bool,
    },
    /// Quasi-polynomial coefficients d[m][n mod D].
    PartitionQuasi {
        /// Positive parts, comma separated.
        #[arg(long, value_delimiter = ',', required = true, value_parser = clap::value_parser!(u64).range(1..))]
        a: Vec<u64>,
        /// Common multiple of the parts (default: their lcm).
        #[arg(long = "D", alias = "d", value_parser = clap::value_parser!(u64).range(1..))]
        period: Option<u64>,
        #[arg(long, value_enum, default_value_t = QuasiRoute::Oracle)]
        route: QuasiRoute,
    },
    /// The delta determinant, or its matrix.
    Delta {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = DetRoute::Direct)]
        route: DetRoute,
        /// Emit the matrix instead of its determinant.
        #[arg(long)]
        matrix: bool,
    },
    /// The delta-bar determinant, or its matrix.
    DeltaBar {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, value_enum, default_value_t = DetRoute::Direct)]
        route: DetRoute,
        #[arg(long)]
        matrix: bool,
    },
    /// The symbolic determinant F_{r,D}.
    FPoly {
        #[command(flatten)]
        dims: Dims,
        /// Use the closed form (r = 1 only).
        #[arg(long)]
        closed_form: bool,
    },
    /// F_{r,D} divided by the r-th power of the Vandermonde product.
    GPoly {
        #[command(flatten)]
        dims: Dims,
    },
    /// The symbolic determinant F̄_{r,D}, or its Vandermonde quotient.
    FbarPoly {
        #[command(flatten)]
        dims: Dims,
        /// Emit Ḡ_{r,D} instead (D >= 2).
        #[arg(long)]
        gbar: bool,
    },
    /// Run a named identity check, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long)]
        max_r: Option<usize>,
        #[arg(long = "max-D", alias = "max-d")]
        max_d: Option<usize>,
    },
}

#[derive(clap::Args)]
struct Dims {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    r: u64,
    #[arg(long = "D", alias = "d", value_parser = clap::value_parser!(u64).range(1..))]
    d: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum BarnesRoute {
    Compositions,
    Series,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuasiRoute {
    Oracle,
    Delta,
    DeltaBar,
    Cramer,
}

#[derive(Clone, Copy, ValueEnum)]
enum DetRoute {
    Direct,
    Symbolic,
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. } | Error::InvalidArgument(_) => 2,
            _ => 1,
        };
        let mut message = e.to_string();
        if let Error::GuardExceeded { .. } = e {
            message.push_str(" (raise the guard or pass --force)");
        }
        Failure { code, message }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let limits = if cli.force {
        Limits::unlimited()
    } else {
        Limits {
            symbolic_order: cli.max_symbolic_order,
            numeric_order: cli.max_numeric_order,
            ..Limits::default()
        }
    };
    let (artifact, failed) = compute(&cli.command, limits)?;
    emit(cli, &artifact)?;
    if failed > 0 {
        return Err(Failure {
            code: 1,
            message: format!("{failed} asserted identity check(s) reported MISMATCH"),
        });
    }
    Ok(())
}

fn spec(parts: &[u64], period: Option<u64>) -> Result<PartitionSpec, Error> {
    match period {
        Some(d) => PartitionSpec::with_period(parts.to_vec(), d),
        None => PartitionSpec::new(parts.to_vec()),
    }
}

/// The artifact and the number of asserted mismatches in it.
fn compute(command: &Command, limits: Limits) -> Result<(Artifact, usize), Error> {
    let dims = |d: &Dims| (d.r as usize, d.d as usize);
    let artifact = match command {
        Command::Bernoulli { j, x, poly } => match (x, poly) {
            (Some(x), _) => bernoulli_poly_eval(*j, x).into(),
            (None, true) => Artifact::Uni(bernoulli_poly(*j)),
            (None, false) => bernoulli_number(*j).into(),
        },
        Command::Barnes { j, a, route } => match route {
            BarnesRoute::Compositions => bernoulli_barnes_number(*j, a).into(),
            BarnesRoute::Series => bernoulli_barnes_series(*j, a).swap_remove(*j).into(),
        },
        Command::PartitionEval { a, n, quasi } => {
            let s = spec(a, None)?;
            if *quasi {
                quasi_from_oracle(&s)?.eval(*n).into()
            } else {
                Artifact::Scalar(p_oracle(&s, *n).to_string())
            }
        }
        Command::PartitionQuasi { a, period, route } => {
            let s = spec(a, *period)?;
            Artifact::Quasi(match route {
                QuasiRoute::Oracle => quasi_from_oracle(&s)?,
                QuasiRoute::Delta => quasi_from_delta_system(&s, limits)?,
                QuasiRoute::DeltaBar => quasi_from_deltabar_system(&s, limits)?,
                QuasiRoute::Cramer => quasi_from_delta_cramer(&s, limits)?,
            })
        }
        Command::Delta { dims: d, route, matrix } => {
            let (r, d) = dims(d);
            limits.check_numeric(r * d)?;
            match (matrix, route) {
                (true, _) => Artifact::Matrix(build_delta_matrix(r, d)?.to_rows()),
                (false, DetRoute::Direct) => delta(r, d)?.into(),
                (false, DetRoute::Symbolic) => delta_via_f_poly(r, d, limits)?.into(),
            }
        }
        Command::DeltaBar { dims: d, route, matrix } => {
            let (r, d) = dims(d);
            limits.check_numeric(r * d)?;
            match (matrix, route) {
                (true, _) => Artifact::Matrix(build_delta_bar_matrix(r, d)?.to_rows()),
                (false, DetRoute::Direct) => delta_bar(r, d)?.into(),
                (false, DetRoute::Symbolic) => delta_bar_via_fbar_poly(r, d, limits)?.into(),
            }
        }
        Command::FPoly { dims: d, closed_form } => {
            let (r, d) = dims(d);
            if *closed_form {
                if r != 1 {
                    return Err(Error::InvalidArgument("--closed-form needs r = 1".into()));
                }
                Artifact::Poly(f1_closed_form(d)?)
            } else {
                Artifact::Poly(f_poly(r, d, limits)?)
            }
        }
        Command::GPoly { dims: d } => {
            let (r, d) = dims(d);
            Artifact::Poly(g_poly(r, d, limits)?)
        }
        Command::FbarPoly { dims: d, gbar } => {
            let (r, d) = dims(d);
            Artifact::Poly(if *gbar { gbar_poly(r, d, limits)? } else { fbar_poly(r, d, limits)? })
        }
        Command::Verify { identity, max_r, max_d } => {
            let params = VerifyParams {
                max_r: *max_r,
                max_d: *max_d,
                limits,
            };
            let reports = run_identity(identity, &params)?;
            let failed = reports.iter().filter(|r| r.is_failure()).count();
            let flagged: Vec<String> = reports
                .iter()
                .filter(|r| r.is_flagged())
                .map(|r| format!("{} {}{}", r.identity, r.verdict.as_str(), if r.report_only { " (report-only)" } else { "" }))
                .collect();
            for line in &flagged {
                eprintln!("flagged: {line}");
            }
            return Ok((Artifact::Reports(reports), failed));
        }
    };
    Ok((artifact, 0))
}

fn emit(cli: &Cli, artifact: &Artifact) -> Result<(), Failure> {
    let io_failure = |message: String| Failure { code: 1, message };
    let mut text = match cli.format {
        Format::Json => artifact.to_json().map_err(|e| io_failure(e.to_string()))?,
        Format::Csv => artifact.to_csv().map_err(|e| io_failure(e.to_string()))?,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let path = match &cli.output_dir {
                Some(dir) if path.is_relative() => dir.join(path),
                _ => path.clone(),
            };
            fs::write(&path, text).map_err(|e| io_failure(format!("cannot write {}: {e}", path.display())))
        }
    }
}
