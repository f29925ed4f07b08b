use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hvas_cli::{emit, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|report| {
        let mut stdout = std::io::stdout().lock();
        emit(&report, cli.format, &mut stdout)?;
        stdout
            .flush()
            .map_err(|e| hvas_cli::CliError::Output(e.to_string()))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("hvas: {error}");
            ExitCode::from(error.exit_code())
        }
    }
}
