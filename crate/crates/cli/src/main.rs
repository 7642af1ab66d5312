use beatwave::cli::Cli;
use beatwave::commands;
use clap::Parser;
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = commands::run(&cli).and_then(|doc| match &cli.common.output {
        Some(path) => std::fs::write(path, doc).map_err(Into::into),
        None => std::io::stdout()
            .write_all(doc.as_bytes())
            .map_err(Into::into),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("beatwave: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
