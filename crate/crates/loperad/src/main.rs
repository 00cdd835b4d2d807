use clap::Parser;

fn main() {
    let cli = loperad::cli::Cli::parse();
    std::process::exit(loperad::cli::run(cli));
}
