fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(arithnull::cli::run(&args));
}
