use unary_ecc::cli;

fn main() {
    let command = cli::parse_args(std::env::args_os()).unwrap_or_else(|e| e.exit());
    match cli::execute(&command) {
        Ok(output) => print!("{output}"),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
