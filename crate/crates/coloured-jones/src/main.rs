fn main() {
    std::process::exit(coloured_jones::cli::run_from_args());
}
