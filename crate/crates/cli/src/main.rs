use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    qext_cli::configure_threads_from_env();
    let mut out = io::stdout().lock();
    let code = qext_cli::run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut out,
        &mut io::stderr(),
    );
    let _ = out.flush();
    ExitCode::from(code as u8)
}
