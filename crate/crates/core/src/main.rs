fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(gl11::cli::run(&args));
}
