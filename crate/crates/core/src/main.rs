fn main() {
    std::process::exit(postselect_cosmo::cli::main_with_args(std::env::args_os()));
}
