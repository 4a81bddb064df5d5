fn main() {
    std::process::exit(adu::cli::main_with(std::env::args_os()));
}
