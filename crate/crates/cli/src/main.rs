//! `chowq`: command-line access to chowq-core with JSON input and output.
//!
//! Exit status is 0 on success, 2 when the library rejects the input (the
//! error tag is printed as JSON) and 1 on I/O, JSON or usage errors.

mod commands;
mod registry;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgMatches, CommandFactory, FromArgMatches, Parser, ValueEnum};
use serde_json::json;

use chowq_core::acceptance;
use chowq_core::io::{error_to_json, to_pretty};
use commands::{Command, Failure};

#[derive(Parser, Debug)]
#[command(name = "chowq", version, about = "Exact computations for Chow quotients of Grassmannians")]
struct Cli {
    /// Worker threads for parallel searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn selftest(output: Option<&PathBuf>) -> Result<bool, String> {
    let reports = acceptance::run_all();
    let mut table = String::new();
    for r in &reports {
        table.push_str(&format!("{r}\n"));
    }
    let passed = reports.iter().filter(|r| r.ok()).count();
    table.push_str(&format!("{passed}/{} criteria passed\n", reports.len()));
    emit(&table, output)?;
    Ok(passed == reports.len())
}

fn subcommand_path(matches: &ArgMatches) -> String {
    let mut names = Vec::new();
    let mut m = matches;
    while let Some((name, sub)) = m.subcommand() {
        names.push(name);
        m = sub;
    }
    names.join(" ")
}

fn run(cli: Cli, path: &str) -> ExitCode {
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("chowq: {e}");
            return ExitCode::from(1);
        }
    }
    let output = cli.output.as_ref();
    if let Command::Selftest = cli.command {
        return match selftest(output) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(2),
            Err(e) => {
                eprintln!("chowq: {e}");
                ExitCode::from(1)
            }
        };
    }
    let (value, code) = match commands::execute(&cli.command) {
        Ok(v) => (v, 0),
        Err(Failure::Domain(e)) => {
            let mut v = error_to_json(&e);
            if let Some(op) = registry::operation(path) {
                v["operation"] = json!(op);
            }
            (v, if e.is_parse() { 1 } else { 2 })
        }
        Err(Failure::Io(msg)) => (json!({"error": "Io", "message": msg}), 1),
    };
    let text = to_pretty(&value) + "\n";
    let written = if code == 0 { emit(&text, output) } else { emit(&text, None) };
    if let Err(e) = written {
        eprintln!("chowq: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let parsed = Cli::command()
        .try_get_matches()
        .and_then(|m| Cli::from_arg_matches(&m).map(|cli| (cli, subcommand_path(&m))));
    match parsed {
        Ok((cli, path)) => run(cli, &path),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
    }
}
