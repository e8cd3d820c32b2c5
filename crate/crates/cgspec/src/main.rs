use std::process::ExitCode;

use cgspec::cli::{run, Cli};
use clap::Parser;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cgspec: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
