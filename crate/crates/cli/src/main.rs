use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use taft_cli::config::{Cli, Command, CommonArgs, Format, RootPolicy};
use taft_cli::{report, root_exponents, run, table, with_pool, RunConfig, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use taft_core::CycContext;

fn write_output(common: &CommonArgs, text: &str) -> Result<(), String> {
    match &common.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };

    let (common, text, code) = match cli.command {
        Command::Verify(args) => {
            let common = args.common;
            let outcome = run(&RunConfig {
                n: common.n,
                suite: args.suite,
                roots: common.roots,
                jobs: common.jobs.map(usize::from),
            });
            let text = match common.format {
                Format::Json => report::to_json(&outcome.reports),
                Format::Csv => report::to_csv(&outcome.reports),
                Format::Text => report::to_text(&outcome.reports),
            };
            for r in &outcome.reports {
                for c in r.cases.iter().filter(|c| !c.pass) {
                    eprintln!("FAIL {} (t={}): {}", c.case_id, r.root_exponent, c.detail.as_deref().unwrap_or(""));
                }
            }
            (common, text, outcome.exit_code)
        }
        Command::Table(common) => {
            let contexts: Vec<CycContext> = common
                .n
                .iter()
                .flat_map(|n| {
                    root_exponents(n, common.roots)
                        .into_iter()
                        .map(move |t| CycContext::with_root(n, t).expect("validated order and exponent"))
                })
                .collect();
            let with_root = common.roots == RootPolicy::All;
            let (text, pass) = with_pool(common.jobs.map(usize::from), || {
                table::emit_identity_table(&contexts, common.format, with_root)
            });
            (common, text, if pass { EXIT_OK } else { EXIT_FAILURE })
        }
    };

    if let Err(e) = write_output(&common, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
