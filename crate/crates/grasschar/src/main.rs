use std::io::{ErrorKind, Write};
use std::process::ExitCode;

use clap::Parser;
use grasschar::cli::{run, Cli};
use grasschar::CliError;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(&cli, &mut out) {
        Ok(code) => code,
        Err(CliError::Io { source, .. }) if source.kind() == ErrorKind::BrokenPipe => 1,
        Err(e) => {
            let _ = out.flush();
            eprintln!("grasschar: {e}");
            e.exit_code()
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
