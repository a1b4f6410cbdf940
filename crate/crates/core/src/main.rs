fn main() {
    std::process::exit(fnz::cli::main_with_env());
}
