fn main() {
    std::process::exit(sweeplab_core::cli::run(std::env::args_os()));
}
