fn main() {
    std::process::exit(shakin::cli::run(std::env::args_os()));
}
