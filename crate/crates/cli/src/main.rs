use std::process::ExitCode;

use clap::Parser;

use grasstilt_cli::{deliver, exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli);
    match &outcome {
        Ok(output) => {
            if let Err(err) = deliver(&cli, output) {
                eprintln!("error: {err:#}");
                return ExitCode::from(2);
            }
        }
        Err(err) => eprintln!("error: {err:#}"),
    }
    ExitCode::from(exit_code(&outcome))
}
