fn main() {
    std::process::exit(isoshift::cli::run(std::env::args_os()));
}
