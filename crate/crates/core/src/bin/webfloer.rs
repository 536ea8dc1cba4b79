use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let report = webfloer::cli::run(std::env::args_os());
    for line in &report.stderr {
        eprintln!("{}", line.trim_end());
    }
    if !report.results.is_null() {
        let out = report.stdout();
        let mut stdout = std::io::stdout().lock();
        let _ = write!(stdout, "{out}");
        if !out.ends_with('\n') {
            let _ = writeln!(stdout);
        }
    }
    ExitCode::from(report.exit_code as u8)
}
