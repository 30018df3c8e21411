use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = qcam::cli::run_from(std::env::args_os());
    if let Some(msg) = &result.error_message {
        eprintln!("error: {msg}");
    }
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout.write_all(result.stdout().as_bytes());
    let _ = stdout.flush();
    ExitCode::from(result.exit_code as u8)
}
