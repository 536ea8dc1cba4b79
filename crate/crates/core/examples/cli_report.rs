//! Drives the CLI in-process and prints the run report.

fn main() {
    let web = concat!(env!("CARGO_MANIFEST_DIR"), "/data/l2.json");
    let report = webfloer::cli::run(["webfloer", "verify-tait", web]);
    println!("command: {}", report.command);
    println!("inputs digest: {}", report.inputs_digest);
    println!("exit code: {}", report.exit_code);
    println!("{}", report.stdout());
}
