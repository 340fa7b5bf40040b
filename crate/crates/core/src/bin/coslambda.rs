use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text, output) = coslambda::cli::main_with_args(std::env::args_os());
    let written = match output {
        Some(path) => std::fs::write(&path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("coslambda: cannot write report: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
