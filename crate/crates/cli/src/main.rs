fn main() {
    std::process::exit(eqminors_cli::run(std::env::args_os()));
}
