fn main() {
    std::process::exit(randmeasure::cli::run(std::env::args_os()));
}
