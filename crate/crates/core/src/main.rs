fn main() {
    std::process::exit(cozero::cli::run(std::env::args_os()));
}
