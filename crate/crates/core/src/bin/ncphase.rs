use std::process::ExitCode;

fn main() -> ExitCode {
    ncphase::cli::main_with_args(std::env::args_os())
}
