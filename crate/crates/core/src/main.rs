fn main() {
    std::process::exit(gwa::cli::run(std::env::args_os()));
}
