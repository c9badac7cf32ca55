fn main() {
    std::process::exit(strcat_core::cli::run(std::env::args_os()));
}
