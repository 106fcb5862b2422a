use std::io;
use std::process::ExitCode;

use clap::Parser;
use taiji_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("taiji: error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
