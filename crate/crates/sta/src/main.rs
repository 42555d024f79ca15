fn main() {
    std::process::exit(sta::cli::run());
}
