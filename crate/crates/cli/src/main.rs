use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use equidist_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let _ = std::io::stdout().write_all(report.stdout.as_bytes());
            if report.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("{}", report.note);
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
