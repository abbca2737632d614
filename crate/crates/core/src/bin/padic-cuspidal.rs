fn main() {
    std::process::exit(padic_cuspidal::cli::main_from_env());
}
