use std::io::{self, BufReader};

fn main() {
    let mut input = BufReader::new(io::stdin());
    let code = chordarc::cli::run(
        std::env::args_os(),
        &mut input,
        &mut io::stdout(),
        &mut io::stderr(),
    );
    std::process::exit(code);
}
