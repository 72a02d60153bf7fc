fn main() {
    std::process::exit(dclique::cli::run(std::env::args_os()));
}
