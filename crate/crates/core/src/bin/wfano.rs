fn main() {
    std::process::exit(wfano::cli::run(std::env::args_os()));
}
