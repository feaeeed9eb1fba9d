use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser};
use subdebt_cli::args::Cli;
use subdebt_cli::error::CliError;

fn write_output(path: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Output(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Some(scenario) = cli.global.scenario.clone() else {
        Cli::command()
            .error(
                clap::error::ErrorKind::MissingRequiredArgument,
                "--scenario <PATH> is required",
            )
            .exit();
    };
    let result = subdebt_cli::run(&cli, &scenario).and_then(|report| {
        write_output(cli.global.out.as_deref(), &report.text)?;
        report.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
