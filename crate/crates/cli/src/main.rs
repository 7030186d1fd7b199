use std::process::ExitCode;

use clap::Parser;
use zcz_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // Usage errors are validation failures (1); clap's default of 2
            // would read as a failed check.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zczseq: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
