mod args;
mod parse;
mod run;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    match run::run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
