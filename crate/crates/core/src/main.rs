use std::io::Write;

fn main() {
    let outcome = mocklie::cli::run(std::env::args_os());
    if outcome.code == 2 {
        eprint!("{}", outcome.output);
    } else {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    std::process::exit(outcome.code);
}
