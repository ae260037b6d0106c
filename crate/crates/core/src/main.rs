use std::process::ExitCode;

fn main() -> ExitCode {
    hyperstrata::cli::run(std::env::args_os())
}
