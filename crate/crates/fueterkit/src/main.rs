//! Command-line interface: batch computation and verification for the
//! quaternionic slice-analysis toolkit.
//!
//! Exit codes: 0 on success, 2 on validation errors (bad flags, malformed
//! inputs, violated preconditions), 3 on numerical failure (a failed verify
//! check or a singular pencil).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fueterkit::contour::{SliceContour, DEFAULT_NODES};
use fueterkit::error::Error;
use fueterkit::kernel::{
    appell_kernel_series, dbar_kernel_series, dbar_series_terms, kernel_eval, KernelKind,
};
use fueterkit::opcalc::{
    calculus_apply, s_spectrum, Calculus, CommutingOperator, OperatorJson, QuaternionMatrixJson,
};
use fueterkit::quaternion::{ImaginaryUnit, Quaternion};
use fueterkit::slice_function::SliceFunction;
use fueterkit::verify::{run_suite, Suite};
use fueterkit::Side;

#[derive(Parser)]
#[command(
    name = "fueterkit",
    version,
    about = "Slice hyperholomorphic kernels, integral formulas, and S-spectrum functional calculi"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the S-spectrum of an operator quadruple as CSV (u,v,multiplicity).
    Spectrum {
        /// Operator JSON file: {"dim": d, "T0": [[..]], .., "T3": [[..]]}
        #[arg(long)]
        op: String,
    },
    /// Evaluate a pointwise kernel at (s, q); prints a quaternion as JSON [w,x,y,z].
    Kernel {
        /// One of SL, SR, FL, FR, P2L, P2R
        #[arg(long)]
        kind: String,
        /// Kernel variable, text form like "2", "1+2i", "0.5-1k"
        #[arg(long)]
        s: String,
        /// Function variable, same text form
        #[arg(long)]
        q: String,
    },
    /// Apply the S-, F-, or order-2 polyanalytic functional calculus to an operator.
    Calc {
        /// Which calculus: S, F, or P2
        #[arg(long)]
        which: String,
        /// Function: powN, exp, rational:n0,n1,../d0,d1,.., inline series
        /// JSON, or @path to a series JSON file
        #[arg(long)]
        f: String,
        /// Operator JSON file
        #[arg(long)]
        op: String,
        #[command(flatten)]
        contour: ContourArgs,
    },
    /// Run the named property checks and print a JSON report.
    Verify {
        /// Suite: all, symbolic, contour, or operator
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare the closed-form order-2 polyanalytic kernel against both of
    /// its series expansions at (s, q).
    SeriesCompare {
        #[arg(long)]
        s: String,
        #[arg(long)]
        q: String,
        /// Tail-bound tolerance driving the truncation
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// left (P2L) or right (P2R)
        #[arg(long, default_value = "left")]
        side: String,
    },
}

#[derive(Args)]
struct ContourArgs {
    /// Disk/annulus outer radius; defaults to 1.5 * spectral radius + 0.5
    #[arg(long)]
    radius: Option<f64>,
    /// Real center of the contour circles
    #[arg(long, default_value_t = 0.0)]
    center: f64,
    /// Inner radius: integrate over an annulus instead of a disk
    #[arg(long)]
    annulus: Option<f64>,
    /// Imaginary unit of the slice plane as "x,y,z"
    #[arg(long, default_value = "1,0,0")]
    j: String,
    /// Quadrature nodes per circle; FUETERKIT_NODES overrides the default
    #[arg(long)]
    nodes: Option<usize>,
}

fn parse_unit(text: &str) -> Result<ImaginaryUnit, Error> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidInput(format!(
            "expected --j as \"x,y,z\", got '{text}'"
        )));
    }
    let mut c = [0.0f64; 3];
    for (slot, part) in c.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad component '{part}' in --j")))?;
    }
    ImaginaryUnit::from_components(c[0], c[1], c[2])
}

fn default_nodes() -> usize {
    std::env::var("FUETERKIT_NODES")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_NODES)
}

fn load_operator(path: &str) -> Result<CommutingOperator, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read '{path}': {e}")))?;
    let parsed: OperatorJson = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("bad operator JSON: {e}")))?;
    parsed.to_operator()
}

fn load_function(spec: &str) -> Result<SliceFunction, Error> {
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read '{path}': {e}")))?;
        return SliceFunction::from_series_json(&text);
    }
    let trimmed = spec.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        return SliceFunction::from_series_json(spec);
    }
    SliceFunction::from_name(spec)
}

fn build_contour(args: &ContourArgs, t: &CommutingOperator) -> Result<SliceContour, Error> {
    let j = parse_unit(&args.j)?;
    let nodes = args.nodes.unwrap_or_else(default_nodes);
    let radius = match args.radius {
        Some(r) => r,
        None => 1.5 * s_spectrum(t).max_radius() + 0.5,
    };
    match args.annulus {
        Some(r_in) => SliceContour::annulus(j, args.center, radius, r_in, nodes),
        None => SliceContour::disk(j, args.center, radius, nodes),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let stdout = std::io::stdout();
    match cli.command {
        Command::Spectrum { op } => {
            let t = load_operator(&op)?;
            print!("{}", s_spectrum(&t).to_csv());
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel { kind, s, q } => {
            let kind = KernelKind::parse(&kind)?;
            let s = Quaternion::parse(&s)?;
            let q = Quaternion::parse(&q)?;
            let value = kernel_eval(kind, s, q)?;
            writeln!(
                stdout.lock(),
                "{}",
                serde_json::to_string(&value).expect("serializable")
            )
            .expect("stdout");
            Ok(ExitCode::SUCCESS)
        }
        Command::Calc {
            which,
            f,
            op,
            contour,
        } => {
            let which = Calculus::parse(&which)?;
            let f = load_function(&f)?;
            let t = load_operator(&op)?;
            let c = build_contour(&contour, &t)?;
            let out = calculus_apply(which, &f, &t, &c)?;
            let json = QuaternionMatrixJson::from(&out);
            writeln!(
                stdout.lock(),
                "{}",
                serde_json::to_string_pretty(&json).expect("serializable")
            )
            .expect("stdout");
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, seed } => {
            let suite = Suite::parse(&suite)?;
            let checks = run_suite(suite, seed);
            writeln!(
                stdout.lock(),
                "{}",
                serde_json::to_string_pretty(&checks).expect("serializable")
            )
            .expect("stdout");
            if checks.iter().all(|c| c.pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(3))
            }
        }
        Command::SeriesCompare { s, q, tol, side } => {
            let s = Quaternion::parse(&s)?;
            let q = Quaternion::parse(&q)?;
            let side = match side.to_ascii_lowercase().as_str() {
                "left" => Side::Left,
                "right" => Side::Right,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "side must be left or right, got '{other}'"
                    )))
                }
            };
            let kind = match side {
                Side::Left => KernelKind::P2L,
                Side::Right => KernelKind::P2R,
            };
            let closed = kernel_eval(kind, s, q)?;
            let dbar = dbar_kernel_series(side, s, q, tol)?;
            let via_appell = appell_kernel_series(side, s, q, tol)?;
            let terms = dbar_series_terms(q.norm() / s.norm(), s.norm(), tol)?;
            let report = serde_json::json!({
                "s": s,
                "q": q,
                "side": if side == Side::Left { "left" } else { "right" },
                "tol": tol,
                "terms": terms,
                "closed_form": closed,
                "dbar_series": dbar,
                "appell_series": via_appell,
                "dbar_deviation": (dbar - closed).norm(),
                "appell_deviation": (via_appell - closed).norm(),
            });
            writeln!(
                stdout.lock(),
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            )
            .expect("stdout");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                // A singular pencil is a numerical failure; everything else
                // an input/precondition problem.
                Error::SingularPencil => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
