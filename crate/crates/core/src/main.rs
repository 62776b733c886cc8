fn main() { std::process::exit(seqent::cli::run(std::env::args_os())); }
