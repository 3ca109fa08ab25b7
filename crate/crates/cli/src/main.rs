fn main() {
    std::process::exit(posetlab_cli::run(std::env::args_os()));
}
