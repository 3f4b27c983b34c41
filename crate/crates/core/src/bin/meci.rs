fn main() {
    std::process::exit(meci::cli::run(std::env::args()));
}
