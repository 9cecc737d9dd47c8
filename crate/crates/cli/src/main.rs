fn main() {
    std::process::exit(gca_cli::run(std::env::args_os()));
}
