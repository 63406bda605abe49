fn main() {
    std::process::exit(brauer::cli::main_with(std::env::args()));
}
