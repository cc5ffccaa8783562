fn main() {
    std::process::exit(wreathmatch::cli::run_from(std::env::args_os()));
}
