fn main() {
    std::process::exit(fplab::cli::run(std::env::args_os()));
}
