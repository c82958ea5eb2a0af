fn main() {
    std::process::exit(logimg::cli::run());
}
