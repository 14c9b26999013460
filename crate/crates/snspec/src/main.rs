use clap::Parser;

use snspec::cli::{run, Cli};

fn main() {
    let request = Cli::parse().into_request();
    match run(request) {
        Ok(outcome) => {
            // CSV documents carry their own trailing newline; JSON does not.
            print!("{}", outcome.document);
            if !outcome.document.ends_with('\n') {
                println!();
            }
            std::process::exit(if outcome.violations { 1 } else { 0 });
        }
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(if error.is_invalid_input() { 2 } else { 1 });
        }
    }
}
