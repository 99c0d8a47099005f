fn main() {
    std::process::exit(theodorus::cli::run());
}
