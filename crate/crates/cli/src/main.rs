mod args;
mod commands;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use dompoly::AlgoError;

use args::Cli;

/// Exit statuses.
pub mod status {
    pub const OK: u8 = 0;
    pub const VERIFY_FAILED: u8 = 1;
    pub const DISAGREEMENT: u8 = 2;
    pub const USAGE: u8 = 64;
    pub const PARSE: u8 = 65;
    pub const CAP: u8 = 66;
}

/// A reason to stop with a nonzero status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Cap(AlgoError),
    Disagreement(String),
    VerifyFailed(usize),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => status::USAGE,
            Failure::Parse(_) => status::PARSE,
            Failure::Cap(_) => status::CAP,
            Failure::Disagreement(_) => status::DISAGREEMENT,
            Failure::VerifyFailed(_) => status::VERIFY_FAILED,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => format!("usage error: {m}"),
            Failure::Parse(m) => format!("parse error: {m}"),
            Failure::Cap(e) => e.to_string(),
            Failure::Disagreement(m) => format!("algorithms disagree: {m}"),
            Failure::VerifyFailed(k) => format!("{k} check(s) failed"),
        }
    }
}

impl From<AlgoError> for Failure {
    fn from(e: AlgoError) -> Self {
        match e {
            AlgoError::CapExceeded { .. } => Failure::Cap(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(status::USAGE),
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(()) => ExitCode::from(status::OK),
        Err(f) => {
            eprintln!("dompoly: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
