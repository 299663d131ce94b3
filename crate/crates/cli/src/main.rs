use clap::Parser;
use pinvlaw_cli::Cli;

fn main() {
    let cli = Cli::parse();
    let code = match pinvlaw_cli::run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            err.code
        }
    };
    std::process::exit(code);
}
