fn main() {
    std::process::exit(symident::cli::run(std::env::args_os()));
}
