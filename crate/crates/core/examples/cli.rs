//! Drives the command-line front end in-process, as the binary would.
fn main() {
    let code = mertens::cli::run(["mertens", "sqfree", "constants", "--q", "5"]);
    println!("exit code {code}");
    let code = mertens::cli::run(["mertens", "approx", "plot", "--lambda", "0.25", "--range", "-2:2:5"]);
    println!("exit code {code}");
}
