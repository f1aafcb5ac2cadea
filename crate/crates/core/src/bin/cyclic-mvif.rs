fn main() {
    std::process::exit(cyclic_mvif::cli::main());
}
