fn main() {
    std::process::exit(fivefold::cli::run(std::env::args()));
}
