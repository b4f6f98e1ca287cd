//! Run every cross-check at a given size.

use std::time::Instant;

use asmprism::verify::{run_check, CHECKS};
use asmprism::UnstableRule;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for name in CHECKS {
        let start = Instant::now();
        let report = run_check(name, n, UnstableRule::default()).unwrap();
        println!("{name:12} {report}  ({:.2?})", start.elapsed());
    }
}
