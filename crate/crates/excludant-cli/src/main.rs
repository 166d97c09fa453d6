use clap::Parser;

fn main() {
    let cli = excludant_cli::Cli::parse();
    let outcome = excludant_cli::execute(&cli);
    if !outcome.stdout.is_empty() {
        print!("{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        eprintln!("{}", outcome.stderr);
    }
    std::process::exit(outcome.code);
}
