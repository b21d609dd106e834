use std::io::Write;
use std::process::ExitCode;

use abeta::{run, thread_limit, Cli, CliError};
use clap::error::ErrorKind;
use clap::Parser;

fn fail(err: &CliError) -> ExitCode {
    eprintln!("{err}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(1);
        }
    };
    let threads = match thread_limit() {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let outcome = match run(&cli, threads) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    let written = match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.document)
            .map_err(|e| CliError::new(Some("--out"), format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(outcome.document.as_bytes())
            .map_err(|e| CliError::new(None, e.to_string())),
    };
    if let Err(e) = written {
        return fail(&e);
    }
    if outcome.failed {
        eprintln!("verification failed: {} violation(s)", outcome.violations);
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
