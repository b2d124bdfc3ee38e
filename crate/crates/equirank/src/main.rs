fn main() {
    std::process::exit(equirank::cli::main_entry());
}
