fn main() {
    std::process::exit(parahitchin::cli::main_with_args(std::env::args_os()));
}
