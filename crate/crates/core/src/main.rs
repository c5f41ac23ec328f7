fn main() {
    std::process::exit(toric_hodge::cli::run(std::env::args_os()));
}
