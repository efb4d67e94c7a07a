use clap::Parser;
use matroid_gwp::cli::{run, RunConfig};

fn main() {
    let config = RunConfig::parse();
    let (status, output) = run(&config);
    if status == 2 {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    std::process::exit(status);
}
