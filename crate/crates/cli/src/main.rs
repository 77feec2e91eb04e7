use std::process::ExitCode;

use clap::Parser;
use primediv_cli::{render_text, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: &Cli) -> Result<(), CliError> {
    let report = run(cli)?;
    let json = serde_json::to_string_pretty(&report).expect("reports serialize");
    if let Some(path) = &cli.out {
        std::fs::write(path, &json)?;
    }
    if cli.json {
        println!("{json}");
    } else {
        print!("{}", render_text(&report));
    }
    Ok(())
}
