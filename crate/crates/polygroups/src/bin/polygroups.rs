fn main() { std::process::exit(polygroups::cli::run_with_output(&std::env::args().skip(1).collect::<Vec<_>>(), &mut std::io::stdout())) }
