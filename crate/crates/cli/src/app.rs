//! Argument parsing and dispatch. Output is collected in memory so the binary
//! and the tests share one code path.

use std::ffi::OsString;
use std::path::PathBuf;

use cdkernel::rational::{parse_list, parse_rational};
use cdkernel::Rational;
use clap::{Parser, Subcommand};

use crate::error::{CliError, CliResult};
use crate::measure_file::parse_measure;
use crate::report::{kernel_report, ortho_report, parse_routes, schur_report, Report};
use crate::suites::{run_suite, select, Params, SuiteReport};

#[derive(Debug, Parser)]
#[command(
    name = "cdkernel",
    version,
    about = "Exact multivariable Christoffel–Darboux kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monic orthogonal polynomials, norms and optionally K(x, y)
    Ortho {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, requires = "y")]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "x")]
        y: Option<String>,
    },
    /// Evaluate K_m(x, y) along every route and compare
    Kernel {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        x: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        y: String,
        /// Comma-separated subset of: sum, two_point_det, integral, one_point_det,
        /// pfaffian_sqrt, pfaffian_zeta, confluent
        #[arg(long)]
        routes: Option<String>,
    },
    /// Schur-function coefficients of the kernel polynomial
    Schur {
        #[arg(long)]
        measure: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Run randomized identity checks
    Verify {
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn from_report(report: Report) -> Outcome {
        let mut stdout = report.lines.join("\n");
        stdout.push('\n');
        Outcome {
            stdout,
            stderr: String::new(),
            code: if report.agreement { 0 } else { 1 },
        }
    }

    fn from_error(err: CliError) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: err.exit_code(),
        }
    }
}

fn rational_arg(flag: &str, text: &str) -> CliResult<Rational> {
    parse_rational(text.trim())
        .map_err(|_| CliError::Parse(format!("{flag}: not a rational: {text:?}")))
}

fn list_arg(flag: &str, text: &str) -> CliResult<Vec<Rational>> {
    parse_list(text).map_err(|_| {
        CliError::Parse(format!(
            "{flag}: expected comma-separated rationals, got {text:?}"
        ))
    })
}

/// 0 when every suite passed, 1 when any found a disagreement.
pub fn suites_exit_code(reports: &[SuiteReport]) -> i32 {
    if reports.iter().all(SuiteReport::passed) {
        0
    } else {
        1
    }
}

fn verify(suite: &str, trials: usize, seed: u64, params: Params) -> CliResult<Outcome> {
    if trials == 0 {
        return Err(CliError::Usage("--trials must be at least 1".into()));
    }
    let suites = select(suite, params.max_n, params.max_m)?;
    let mut out = Outcome::default();
    let mut reports = Vec::new();
    for s in suites {
        let report = run_suite(s, trials, seed, params);
        for line in report.lines() {
            out.stdout.push_str(&line);
            out.stdout.push('\n');
        }
        out.stderr.push_str(&format!(
            "suite={s} duration_ms={}\n",
            report.duration.as_millis()
        ));
        reports.push(report);
    }
    out.code = suites_exit_code(&reports);
    Ok(out)
}

fn dispatch(command: Command) -> CliResult<Outcome> {
    match command {
        Command::Ortho { measure, n, x, y } => {
            let mu = parse_measure(&measure)?;
            let xy = match (x, y) {
                (Some(x), Some(y)) => Some((rational_arg("--x", &x)?, rational_arg("--y", &y)?)),
                _ => None,
            };
            Ok(Outcome::from_report(ortho_report(&mu, n, xy)?))
        }
        Command::Kernel {
            measure,
            n,
            m,
            x,
            y,
            routes,
        } => {
            let mu = parse_measure(&measure)?;
            let routes = parse_routes(routes.as_deref())?;
            let x = list_arg("--x", &x)?;
            let y = list_arg("--y", &y)?;
            Ok(Outcome::from_report(kernel_report(
                &mu, n, m, x, y, &routes,
            )?))
        }
        Command::Schur { measure, n, m } => {
            let mu = parse_measure(&measure)?;
            Ok(Outcome::from_report(schur_report(&mu, n, m)?))
        }
        Command::Verify {
            suite,
            trials,
            seed,
            max_n,
            max_m,
        } => verify(&suite, trials, seed, Params { max_n, max_m }),
    }
}

/// Runs one command line (including the program name) and returns its output and exit code.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    dispatch(cli.command).unwrap_or_else(Outcome::from_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_example_runs() {
        let out = run([
            "cdkernel", "verify", "--suite", "rains", "--trials", "50", "--seed", "42", "--max-n",
            "0", "--max-m", "2",
        ]);
        assert_eq!(out.stdout, "suite=rains trials=50 status=PASS\n");
        assert_eq!(out.code, 0);
    }

    #[test]
    fn usage_errors_exit_two() {
        for args in [
            vec![
                "cdkernel", "verify", "--suite", "nonsense", "--trials", "1", "--seed", "1",
                "--max-n", "1", "--max-m", "1",
            ],
            vec!["cdkernel", "verify", "--trials", "0"],
            vec!["cdkernel", "verify", "--max-m", "9"],
            vec!["cdkernel", "frobnicate"],
            vec!["cdkernel", "kernel", "--n", "2"],
        ] {
            let out = run(args.clone());
            assert_eq!(out.code, 2, "{args:?}");
            assert!(out.stdout.is_empty());
            assert!(!out.stderr.is_empty());
        }
    }

    #[test]
    fn help_goes_to_stdout() {
        let out = run(["cdkernel", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("verify"));
    }
}
