use std::io::Write;
use std::panic;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = panic::catch_unwind(|| dsr_cli::run(std::env::args_os()));
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.code as u8)
        }
        // The panic hook already printed the message.
        Err(_) => ExitCode::from(2),
    }
}
