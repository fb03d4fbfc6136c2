fn main() {
    std::process::exit(belief_change::cli::run(std::env::args_os()));
}
