use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = kestab::cli::run(std::env::args_os());
    if code == kestab::cli::EXIT_INPUT {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
