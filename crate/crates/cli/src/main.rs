fn main() {
    std::process::exit(tempotrav_cli::main_with(std::env::args_os()));
}
