fn main() {
    std::process::exit(solvlie_cli::run(std::env::args()));
}
