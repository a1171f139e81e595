use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = mriordan::cli::run(std::env::args_os(), &mut io::stdin(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(status as u8)
}
