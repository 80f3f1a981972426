mod args;
mod commands;
mod config;
mod inputs;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;

/// Exit 1: a numerical check failed. Exit 2: bad arguments or inputs.
pub enum Failure {
    Numerical(String),
    Usage(String),
}

impl From<dunkl_osc::Error> for Failure {
    fn from(e: dunkl_osc::Error) -> Self {
        match e {
            dunkl_osc::Error::Gate(_) => Failure::Numerical(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

fn thread_count(flag: Option<usize>) -> Result<Option<usize>, Failure> {
    if let Some(n) = flag {
        return Ok(Some(n));
    }
    match std::env::var("DUNKL_OSC_THREADS") {
        Ok(s) if !s.trim().is_empty() => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::Usage(format!("DUNKL_OSC_THREADS must be a positive integer, got '{s}'"))),
        _ => Ok(None),
    }
}

fn run(cli: Cli) -> Result<commands::Done, Failure> {
    if let Some(n) = thread_count(cli.threads)? {
        if n == 0 {
            return Err(Failure::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(format!("cannot start {n} threads: {e}")))?;
    }
    commands::dispatch(cli.command)
}

fn main() -> ExitCode {
    let argv = match config::merge(std::env::args_os().collect()) {
        Ok(a) => a,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(done) => {
            if done.data_on_stdout {
                eprintln!("{}", done.summary);
            } else {
                println!("{}", done.summary);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Numerical(msg)) => {
            println!("FAILED: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
