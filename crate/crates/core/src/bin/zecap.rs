fn main() {
    std::process::exit(zecap::cli::run(std::env::args_os(), &mut std::io::stdout()));
}
