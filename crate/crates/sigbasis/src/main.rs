use clap::Parser;
use sigbasis::cli::{run, Args};

fn main() {
    let args = Args::parse();
    let code = run(
        &args,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
