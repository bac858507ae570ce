//! `cliffdet`: evaluate multivector expressions in `Cl(p,q)`, compute
//! determinants, inverses, traces and matrix images, and run the randomised
//! verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cliffdet::detinv::MAX_CLOSED_FORM_DIM;
use cliffdet::json::{complex_to_value, matrix_to_json, multivector_to_json};
use cliffdet::parser::format_complex;
use cliffdet::verify::{self, Suite};
use cliffdet::{
    default_invertibility_tol, det, det_via_matrix, inverse, parse_and_evaluate, represent, trace,
    Complex, Error, Multivector, Signature,
};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "cliffdet",
    version,
    about = "Determinants, inverses and traces in complex Clifford algebras"
)]
struct Cli {
    /// Signature as `p,q`.
    #[arg(long, global = true, value_name = "P,Q")]
    sig: Option<Signature>,
    /// Tolerance for `--check` comparisons; for `inv`, the invertibility
    /// threshold (default scales with the coefficients).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Master seed for `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate an expression and print it in canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Closed-form determinant (n <= 5).
    Det {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Also compute det of the matrix image and fail if they differ.
        #[arg(long)]
        check: bool,
    },
    /// Closed-form inverse (n <= 5).
    Inv {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Scalar part.
    Trace {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Matrix image under the recurrent representation, as JSON.
    Matrix {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Cross-check closed forms against the matrix oracle on random inputs.
    Verify {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Run a single suite.
        #[arg(long, value_name = "SUITE")]
        only: Option<String>,
    },
}

const DEFAULT_TOL: f64 = 1e-9;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::UnsupportedDimension { .. } => 5,
            _ => 3,
        };
        Failure::new(code, e.to_string())
    }
}

fn require_sig(cli: &Cli) -> Result<Signature, Failure> {
    cli.sig
        .ok_or_else(|| Failure::new(2, "--sig p,q is required"))
}

fn evaluate(cli: &Cli, expr: &str) -> Result<Multivector, Failure> {
    Ok(parse_and_evaluate(expr, require_sig(cli)?)?)
}

fn closed_form_only(sig: Signature) -> Result<(), Failure> {
    if sig.n() > MAX_CLOSED_FORM_DIM {
        return Err(Failure::new(
            5,
            format!(
                "closed forms need n <= {MAX_CLOSED_FORM_DIM}, got n = {}",
                sig.n()
            ),
        ));
    }
    Ok(())
}

fn render_mv(cli: &Cli, u: &Multivector) -> String {
    if cli.json {
        multivector_to_json(u)
    } else {
        u.to_string()
    }
}

fn render_scalar(cli: &Cli, key: &str, c: Complex) -> String {
    if cli.json {
        json!({ key: complex_to_value(c) }).to_string()
    } else {
        format_complex(c)
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    match &cli.command {
        Command::Eval { expr } => Ok(render_mv(cli, &evaluate(cli, expr)?)),
        Command::Det { expr, check } => {
            let u = evaluate(cli, expr)?;
            closed_form_only(u.sig())?;
            let d = det(&u)?;
            if !check {
                return Ok(render_scalar(cli, "det", d));
            }
            let oracle = det_via_matrix(&u);
            let tol = cli.tol.unwrap_or(DEFAULT_TOL);
            let diff = (d - oracle).norm();
            let text = if cli.json {
                json!({ "det": complex_to_value(d), "oracle": complex_to_value(oracle) })
                    .to_string()
            } else {
                format!(
                    "{}\noracle {} (diff {diff:e})",
                    format_complex(d),
                    format_complex(oracle)
                )
            };
            if diff > tol * (1.0 + oracle.norm()) {
                return Err(Failure::new(
                    4,
                    format!("{text}\noracle mismatch beyond tolerance {tol:e}"),
                ));
            }
            Ok(text)
        }
        Command::Inv { expr } => {
            let u = evaluate(cli, expr)?;
            closed_form_only(u.sig())?;
            let tol = cli.tol.unwrap_or_else(|| default_invertibility_tol(&u));
            Ok(render_mv(cli, &inverse(&u, tol)?))
        }
        Command::Trace { expr } => Ok(render_scalar(cli, "trace", trace(&evaluate(cli, expr)?))),
        Command::Matrix { expr } => Ok(matrix_to_json(&represent(&evaluate(cli, expr)?))),
        Command::Verify { trials, only } => {
            let suites = match only {
                Some(name) => vec![Suite::from_name(name).ok_or_else(|| {
                    let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                    Failure::new(
                        2,
                        format!("unknown suite `{name}` (one of: {})", names.join(", ")),
                    )
                })?],
                None => Suite::ALL.to_vec(),
            };
            let sigs = match cli.sig {
                Some(s) => vec![s],
                None => Signature::all_up_to(MAX_CLOSED_FORM_DIM),
            };
            let reports = verify::run_all(&sigs, &suites, *trials, cli.seed);
            let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
            let mut lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "TOTAL suites={} failures={failures}",
                reports.len()
            ));
            let text = lines.join("\n");
            if failures > 0 {
                return Err(Failure::new(1, text));
            }
            Ok(text)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            if code == 1 || code == 4 {
                // the report itself belongs on stdout
                println!("{message}");
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
