fn main() {
    std::process::exit(edtop::cli::run(std::env::args_os()));
}
