//! Checks every corpus fixture and prints one line per claim.

use pennyrig::corpus::{check_fixture, corpus, Outcome};
use pennyrig::enumerate::NumericOptions;
use pennyrig::framework::ToleranceConfig;

fn main() {
    let opts = NumericOptions::default();
    let tol = ToleranceConfig::default();
    let mut failed = 0;
    for f in corpus() {
        let report = check_fixture(&f, &opts, &tol);
        for c in &report.claims {
            println!("{:<28} {:<16} {:<20} {:<22} {:?}", report.id, c.claim, c.expected, c.observed, c.outcome);
            failed += usize::from(c.outcome == Outcome::Failed);
        }
    }
    println!("{failed} failed claim(s)");
}
