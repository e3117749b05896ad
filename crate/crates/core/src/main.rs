fn main() {
    std::process::exit(selfcomm::cli::run(std::env::args_os()));
}
