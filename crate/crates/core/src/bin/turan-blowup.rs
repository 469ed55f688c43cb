fn main() {
    std::process::exit(turan_blowup::cli::run(std::env::args_os()));
}
