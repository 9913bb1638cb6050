fn main() {
    std::process::exit(pcx::cli::run(std::env::args_os()));
}
