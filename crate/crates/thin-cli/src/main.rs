use std::io::Write;

use clap::Parser;
use thin_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("thin: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
