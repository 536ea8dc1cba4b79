//! Runs the golden corpus and prints the table.

fn main() {
    let table = webfloer::corpus::run_corpus();
    print!("{}", table.to_text());
    if !table.ok() {
        std::process::exit(1);
    }
}
