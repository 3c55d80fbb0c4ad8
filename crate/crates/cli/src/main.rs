use std::process::ExitCode;

use clap::Parser;

use signed_mpinv_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.json));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                let doc = serde_json::json!({ "error": format!("{e:#}") });
                println!("{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
