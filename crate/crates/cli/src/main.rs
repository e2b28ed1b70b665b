use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rickartlab::report::to_json;
use rickartlab::runner::{
    endo_ring_export, list_builtins, run_check, run_suite, suite_exit_code, CheckOptions,
    TargetKind,
};

/// Exact deciders for Rickart/Baer-style properties of finite rings,
/// finite modules and finitely generated abelian groups, with a
/// corpus-quantified theorem verification suite.
#[derive(Parser)]
#[command(name = "rickartlab", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide one property of one ring, module or z-module.
    Check {
        /// Target kind: ring, module or zmodule.
        kind: String,
        /// `builtin:<name>` or a path to a JSON file.
        source: String,
        /// Property tag (e.g. rickart, baer, vn_regular).
        #[arg(long)]
        property: Option<String>,
        /// Module report kind: correspondence, faith-utumi or qi-equiv.
        #[arg(long)]
        report: Option<String>,
        /// Emit the machine-readable JSON report.
        #[arg(long)]
        json: bool,
        /// Entry bound for the z-module endomorphism sweep.
        #[arg(long, default_value_t = 5)]
        bound: i64,
        /// Override the module-order cap.
        #[arg(long)]
        cap_module: Option<usize>,
        /// Collect every counterexample instead of the first.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Replay the whole theorem registry over a corpus.
    Suite {
        /// `builtin` or one or more corpus JSON files.
        #[arg(long, num_args = 1.., required = true)]
        corpus: Vec<String>,
        /// Restrict to the given theorem ids.
        #[arg(long, num_args = 1..)]
        filter: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 5)]
        bound: i64,
        #[arg(long)]
        cap_module: Option<usize>,
    },
    /// Export the endomorphism ring of a module as a ring file.
    EndoRing {
        /// `builtin:<name>` or a path to a module JSON file.
        source: String,
        /// Output path; omitted means stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cap_module: Option<usize>,
    },
    /// List the named builtin corpus.
    ListBuiltins,
}

fn options(bound: i64, cap_module: Option<usize>, all_witnesses: bool) -> CheckOptions {
    let mut opts = CheckOptions {
        bound,
        all_witnesses,
        ..CheckOptions::default()
    };
    if let Some(cap) = cap_module {
        opts.caps.module_order = cap;
    }
    opts
}

fn thread_count() -> usize {
    std::env::var("RICKARTLAB_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check {
            kind,
            source,
            property,
            report,
            json,
            bound,
            cap_module,
            all_witnesses,
        } => {
            let kind = match TargetKind::parse(&kind) {
                Ok(k) => k,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let opts = options(bound, cap_module, all_witnesses);
            match run_check(kind, &source, property.as_deref(), report.as_deref(), &opts) {
                Ok(rep) => {
                    if json {
                        println!("{}", to_json(&rep));
                    } else {
                        println!("{}", rep.to_text());
                    }
                    rep.exit_code
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    2
                }
            }
        }
        Command::Suite {
            corpus,
            filter,
            json,
            bound,
            cap_module,
        } => {
            let opts = options(bound, cap_module, false);
            match run_suite(&corpus, &filter, &opts, thread_count()) {
                Ok(rep) => {
                    if json {
                        println!("{}", to_json(&rep));
                    } else {
                        print!("{}", rep.to_text());
                    }
                    suite_exit_code(&rep)
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    2
                }
            }
        }
        Command::EndoRing {
            source,
            out,
            cap_module,
        } => {
            let opts = options(5, cap_module, false);
            match endo_ring_export(&source, out.as_deref(), &opts) {
                Ok(json) => {
                    if out.is_none() {
                        println!("{json}");
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {e:#}");
                    2
                }
            }
        }
        Command::ListBuiltins => {
            print!("{}", list_builtins(&CheckOptions::default().caps));
            0
        }
    };
    ExitCode::from(code as u8)
}
