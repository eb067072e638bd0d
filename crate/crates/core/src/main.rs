fn main() {
    std::process::exit(epifit::cli::run());
}
