use clap::Parser;

use elastic_weyl::cli::{execute, Cli};

fn main() {
    let cli = Cli::parse();
    if let Err(e) = execute(&cli) {
        eprintln!("error: {e}");
        std::process::exit(if e.is_config() { 2 } else { 3 });
    }
}
