fn main() {
    std::process::exit(cones::cli::run(std::env::args_os()));
}
