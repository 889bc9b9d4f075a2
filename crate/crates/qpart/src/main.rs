use std::io::{self, Write};

fn main() {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = qpart::cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    if out.flush().is_err() {
        std::process::exit(2);
    }
    std::process::exit(code);
}
