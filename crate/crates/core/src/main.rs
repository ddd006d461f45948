fn main() {
    std::process::exit(mep::cli::cli_main(std::env::args()));
}
