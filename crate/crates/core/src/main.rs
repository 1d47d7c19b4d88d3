fn main() {
    std::process::exit(gamman::cli::cli_main(std::env::args_os()));
}
