fn main() {
    env_logger::init();
    std::process::exit(uqplus::cli::run(std::env::args_os()));
}
