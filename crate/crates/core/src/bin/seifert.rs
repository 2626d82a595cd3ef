fn main() {
    std::process::exit(seifert::cli::main());
}
