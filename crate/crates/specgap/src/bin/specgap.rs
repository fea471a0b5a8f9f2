use std::io::{stderr, stdin, stdout, Write};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut input = stdin().lock();
    let mut out = stdout().lock();
    let mut err = stderr().lock();
    let code = specgap::cli::run(&args, &mut input, &mut out, &mut err);
    let _ = out.flush();
    let _ = err.flush();
    std::process::exit(code);
}
