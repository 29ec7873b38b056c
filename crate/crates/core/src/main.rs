use clap::Parser;
use rzpoly::cli::{dispatch, Cli};

fn main() {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            let text = outcome.render(cli.format, cli.raw);
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("cannot write {}: {e}", path.display());
                        std::process::exit(rzpoly::cli::EXIT_INPUT);
                    }
                }
                None => print!("{text}"),
            }
            std::process::exit(outcome.exit);
        }
        Err(e) => {
            eprintln!("{}", serde_json::to_string_pretty(&e.to_json()).unwrap_or_default());
            std::process::exit(e.exit_code());
        }
    }
}
