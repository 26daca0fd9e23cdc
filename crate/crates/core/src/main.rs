fn main() {
    std::process::exit(weaklens::cli::main_with_args(std::env::args_os()));
}
