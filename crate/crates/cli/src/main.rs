use std::io::Write;

use solvalg_cli::{run_command, EXIT_USAGE};

fn main() {
    let outcome = run_command(std::env::args_os());
    if outcome.code == EXIT_USAGE {
        let _ = std::io::stderr().write_all(outcome.output.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    }
    std::process::exit(outcome.code);
}
