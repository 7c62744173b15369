fn main() {
    std::process::exit(svcr::cli::main_entry());
}
