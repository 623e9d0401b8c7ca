fn main() {
    std::process::exit(entrobound::cli::run_from_env());
}
