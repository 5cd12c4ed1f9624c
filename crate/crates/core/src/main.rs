fn main() {
    std::process::exit(mertens::cli::run(std::env::args_os()));
}
