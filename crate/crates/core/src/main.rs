fn main() {
    std::process::exit(anumber::cli::main());
}
