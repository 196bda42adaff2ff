fn main() {
    std::process::exit(garside::cli::run(std::env::args_os()));
}
