use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use supergeom::cli::{run, Cli};

fn main() -> ExitCode {
    match std::panic::catch_unwind(dispatch) {
        Ok(code) => code,
        // a panic is an internal error
        Err(_) => ExitCode::from(2),
    }
}

fn dispatch() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
