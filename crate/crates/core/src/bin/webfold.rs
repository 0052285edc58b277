fn main() {
    std::process::exit(webfold::cli::main());
}
