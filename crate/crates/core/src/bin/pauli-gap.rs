fn main() {
    std::process::exit(pauli_gap::cli::execute(std::env::args_os()));
}
