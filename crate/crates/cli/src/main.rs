use std::process::ExitCode;

use kpz_cli::{execute, exit, output, parse_args, workers_from_env, CliError, Parsed};

fn run() -> Result<(), CliError> {
    let cfg = match parse_args(std::env::args_os())? {
        Parsed::Print(text) => {
            print!("{text}");
            return Ok(());
        }
        Parsed::Run(cfg) => cfg,
    };
    // fail on an unwritable path before spending time on the computation
    if let Some(path) = &cfg.out {
        std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|source| CliError::Output { path: path.clone(), source })?;
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers_from_env()? {
        pool = pool.num_threads(n);
    }
    let pool = pool.build().map_err(|e| CliError::Usage(e.to_string()))?;
    let text = pool.install(|| execute(&cfg))?;
    output::emit(cfg.out.as_deref(), &text)
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::from(exit::SUCCESS as u8),
        Err(e) => {
            eprintln!("kpz-lab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
