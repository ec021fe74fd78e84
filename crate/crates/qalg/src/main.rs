use std::process::ExitCode;

fn main() -> ExitCode {
    qalg::cli::run()
}
