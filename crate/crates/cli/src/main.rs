use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use distpf_cli::{run, Cli};

/// Usage and config errors. Kept apart from the documented codes 2 and 3.
const EXIT_USAGE: u8 = 1;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<i32> {
    let spec = cli.flags.resolve()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let outcome = run(cli.command, &spec, &mut out)?;
    out.flush()?;
    if let Some(path) = &cli.flags.json {
        let text = serde_json::to_string_pretty(&outcome.json)?;
        std::fs::write(path, text + "\n")
            .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?;
    }
    Ok(outcome.exit_code)
}
