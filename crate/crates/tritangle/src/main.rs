use std::process::ExitCode;

fn main() -> ExitCode {
    tritangle::cli::run(std::env::args_os())
}
