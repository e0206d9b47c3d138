fn main() {
    std::process::exit(oddcycles::cli::run(std::env::args()));
}
