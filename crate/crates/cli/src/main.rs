fn main() {
    std::process::exit(grover_ent_cli::main_with(std::env::args_os()));
}
