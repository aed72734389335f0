use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let io = azi::cli::Io { stdin: &mut io::stdin().lock(), stdout: &mut io::stdout().lock(), stderr: &mut io::stderr().lock() };
    ExitCode::from(azi::cli::run(std::env::args_os(), io) as u8)
}
