//! One PASS/FAIL line per acceptance criterion, with its time budget and
//! tolerance. Exits non-zero if any criterion fails.

fn main() {
    let mut failed = 0;
    for s in cli::scenarios::all() {
        let o = s.run();
        println!("{}", o.line());
        failed += usize::from(!o.passed);
    }
    println!("acceptance: {} passed, {failed} failed", cli::scenarios::all().len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
