//! The `edtop` command line.
//!
//! Exit codes: 0 when every check passes or the claim holds, 1 when a
//! counterexample or disagreement is found, 2 on usage errors, 3 on an
//! invalid topology file or claim.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::characterizations::{check, Statement, Verdict};
use crate::claim::parse_claim;
use crate::enumeration::{enumerate_homeo_classes, enumerate_topologies, SizeLimit};
use crate::harness::{ed_census, model_check, verify_theorem, ModelFilter, SweepOptions};
use crate::io::load_topology;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "edtop", version, about = "Closure/interior algebra and extremal disconnectedness on finite spaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FilterArg {
    All,
    Ed,
    NonEd,
}

#[derive(clap::Args, Debug)]
struct SweepArgs {
    /// Allow 6 and 7 points.
    #[arg(long)]
    extended: bool,
    /// Worker threads (default: one per core). Does not affect output.
    #[arg(long)]
    jobs: Option<usize>,
    /// Maximum failures of each kind listed in the report.
    #[arg(long, default_value_t = 100)]
    cap: usize,
    /// Include wall-clock durations in the output.
    #[arg(long)]
    timing: bool,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            limit: if self.extended { SizeLimit::Extended } else { SizeLimit::Standard },
            jobs: self.jobs,
            failure_cap: self.cap,
            progress: self.extended.then_some(progress as fn(usize, u64)),
        }
    }
}

fn progress(n: usize, done: u64) {
    eprintln!("n = {n}: {done} topologies processed");
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate conditions (a)-(g) on the space in a topology file.
    Check {
        file: String,
        /// A single statement id (a..g, lemma1, corollary2, hint, hint-open, e-printed) or `all`.
        #[arg(long, default_value = "all")]
        condition: String,
        /// Also evaluate Lemma 1, Corollary 2, both hint variants and (e) as printed.
        #[arg(long)]
        lemmas: bool,
    },
    /// Check that (a)-(g) agree on every topology with at most N points.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// One space per homeomorphism class.
        #[arg(long)]
        up_to_homeo: bool,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// List every topology on N points.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        up_to_homeo: bool,
        #[arg(long)]
        extended: bool,
    },
    /// Model-check a quantified identity on every topology with at most N points.
    Claim {
        text: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Count extremally disconnected spaces via conditions (a) and (g).
    Census {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

/// Runs the command line with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID_INPUT
        }
    }
}

/// Runs the command line on the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run_with(args, &mut stdout.lock(), &mut stderr.lock());
    let _ = std::io::stdout().flush();
    code
}

enum Failure {
    Usage(String),
    Input(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Check { file, condition, lemmas } => {
            let mut statements: Vec<Statement> = if condition == "all" {
                Statement::CONDITIONS.to_vec()
            } else {
                vec![condition.parse::<Statement>().map_err(usage)?]
            };
            if lemmas {
                for s in [Statement::Lemma1, Statement::Corollary2, Statement::Hint, Statement::HintOpen, Statement::EPrinted] {
                    if !statements.contains(&s) {
                        statements.push(s);
                    }
                }
            }
            let t = load_topology(&file).map_err(|e| Failure::Input(e.to_string()))?;
            let verdicts: Vec<Verdict> = statements.iter().map(|&s| check(&t, s)).collect();
            let conditions: Vec<bool> = verdicts
                .iter()
                .filter(|v| v.statement.is_some_and(Statement::is_condition))
                .map(|v| v.holds)
                .collect();
            let disagreement = conditions.iter().any(|&b| b) && conditions.iter().any(|&b| !b);
            if json {
                emit(out, &report::check_document(&file, &t, &verdicts).to_json())?;
            } else {
                emit(out, &report::check_text(&t, &verdicts, disagreement))?;
            }
            let all_hold = verdicts.iter().all(|v| v.holds);
            Ok(if all_hold && !disagreement { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Verify { max_n, up_to_homeo, sweep } => {
            let opts = sweep.options();
            let r = verify_theorem(max_n, up_to_homeo, &opts).map_err(usage)?;
            if json {
                emit(out, &report::verify_document(&r, sweep.cap, sweep.timing).to_json())?;
            } else {
                emit(out, &report::verify_text(&r, sweep.timing))?;
            }
            Ok(if r.is_clean() { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Enumerate { n, up_to_homeo, extended } => {
            let limit = if extended { SizeLimit::Extended } else { SizeLimit::Standard };
            let stream: Box<dyn Iterator<Item = _>> = if up_to_homeo {
                Box::new(enumerate_homeo_classes(n, limit).map_err(usage)?)
            } else {
                Box::new(enumerate_topologies(n, limit).map_err(usage)?)
            };
            let io_err = |e: std::io::Error| Failure::Usage(format!("cannot write output: {e}"));
            if json {
                report::write_enumeration_json(out, n, up_to_homeo, stream).map_err(io_err)?;
            } else {
                let mut count = 0u64;
                for t in stream {
                    writeln!(out, "{t}").map_err(io_err)?;
                    count += 1;
                }
                writeln!(out, "{count} topologies on {n} points{}", if up_to_homeo { " up to homeomorphism" } else { "" })
                    .map_err(io_err)?;
            }
            Ok(EXIT_OK)
        }
        Command::Claim { text, max_n, filter, sweep } => {
            let claim = parse_claim(&text).map_err(|e| Failure::Input(format!("claim: {e}")))?;
            let filter = match filter {
                FilterArg::All => ModelFilter::All,
                FilterArg::Ed => ModelFilter::EdOnly,
                FilterArg::NonEd => ModelFilter::NonEdOnly,
            };
            let r = model_check(&claim, max_n, filter, &sweep.options()).map_err(usage)?;
            if json {
                emit(out, &report::claim_document(&r, sweep.cap, sweep.timing).to_json())?;
            } else {
                emit(out, &report::claim_text(&r, sweep.timing))?;
            }
            Ok(if r.total_failures() == 0 { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
        Command::Census { max_n, sweep } => {
            let start = Instant::now();
            let via = [Statement::A, Statement::G];
            let rows = ed_census(max_n, &via, &sweep.options()).map_err(usage)?;
            if json {
                emit(out, &report::census_document(&rows, &via, max_n, start.elapsed(), sweep.timing).to_json())?;
            } else {
                emit(out, &report::census_text(&rows, &via))?;
            }
            let consistent = rows.iter().all(|r| r.counts[0] == r.counts[1]);
            Ok(if consistent { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("edtop").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_capture(&[]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--max-n", "6"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["check", "x.json", "--condition", "z"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn bad_claim_exits_3() {
        let (code, _, err) = run_capture(&["claim", "forall open A : cl(B) = B", "--max-n", "2"]);
        assert_eq!(code, EXIT_INVALID_INPUT);
        assert!(err.contains("`B` is not bound"), "{err}");
    }

    #[test]
    fn missing_file_exits_3() {
        assert_eq!(run_capture(&["check", "/nonexistent/space.json"]).0, EXIT_INVALID_INPUT);
    }

    #[test]
    fn enumerate_text_lists_spaces() {
        let (code, out, _) = run_capture(&["enumerate", "--n", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.ends_with("4 topologies on 2 points\n"));
        let (_, out, _) = run_capture(&["enumerate", "--n", "3", "--up-to-homeo"]);
        assert!(out.ends_with("9 topologies on 3 points up to homeomorphism\n"));
    }

    #[test]
    fn enumerate_json_is_valid() {
        for n in ["0", "2"] {
            let (_, out, _) = run_capture(&["--format", "json", "enumerate", "--n", n]);
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert_eq!(v["version"], 1);
        }
    }

    #[test]
    fn census_reports_both_routes() {
        let (code, out, _) = run_capture(&["census", "--max-n", "3", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["per_n_stats"][3]["ed_via_a"], 26);
        assert_eq!(v["per_n_stats"][3]["ed_via_g"], 26);
    }
}
