use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use moebius_cli::args::{Cli, OutputFormat};
use moebius_cli::{exit_code, run};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((envelope, csv)) => {
            let text = match (cli.global.output, csv) {
                (OutputFormat::Csv, Some(csv)) => csv,
                (OutputFormat::Csv, None) => {
                    eprintln!("error: {} has no CSV form", cli.command.name());
                    return ExitCode::from(3);
                }
                _ => serde_json::to_string_pretty(&envelope).expect("JSON values serialize") + "\n",
            };
            // a closed pipe downstream is not our failure
            match io::stdout().lock().write_all(text.as_bytes()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
