mod args;
mod commands;
mod output;
mod svg;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Verb};
use commands::{CliError, Report};

fn run(cli: &Cli) -> Result<Report, CliError> {
    let opts = &cli.opts;
    match &cli.verb {
        Verb::Count { what } => commands::count(*what, opts),
        Verb::Oracle { class } => commands::oracle(class, opts),
        Verb::BijectionCheck => commands::bijection_check(opts),
        Verb::ReflectCheck => commands::reflect_check(opts),
        Verb::Recurrence { spec } => commands::recurrence(spec, opts),
        Verb::Asym { spec } => commands::asym(spec, opts),
        Verb::Table { which } => commands::table(*which, opts),
        Verb::Render { diagram } => commands::render(diagram),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let written = match &cli.opts.out {
        Some(path) => std::fs::write(path, &report.text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(report.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if report.failures > 0 {
        eprintln!("error: {}", CliError::Failed(report.failures));
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
