use std::process::ExitCode;

use clap::Parser;
use homlts_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match homlts_cli::run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.render());
            if outcome.report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
