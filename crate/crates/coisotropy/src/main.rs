fn main() {
    std::process::exit(coisotropy::cli_main());
}
