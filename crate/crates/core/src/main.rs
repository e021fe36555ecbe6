use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qstrcmp::cli::{self, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match cli::run(&cli) {
        Ok(outcome) => {
            if cli.command.output().out.is_none() {
                let mut out = std::io::stdout().lock();
                if out.write_all(outcome.text.as_bytes()).and_then(|_| out.flush()).is_err() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
