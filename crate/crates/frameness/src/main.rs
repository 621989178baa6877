fn main() {
    std::process::exit(frameness::cli::run(std::env::args_os()));
}
