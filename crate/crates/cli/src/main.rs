use std::io;
use std::process::ExitCode;

use clap::Parser;

use randic_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("randic: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
