fn main() {
    std::process::exit(sqo_core::cli::main_with_args(std::env::args_os()));
}
