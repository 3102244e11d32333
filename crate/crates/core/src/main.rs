fn main() {
    std::process::exit(infhopf::cli::run(std::env::args()));
}
