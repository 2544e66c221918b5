fn main() {
    std::process::exit(musener::cli::run(std::env::args_os()));
}
