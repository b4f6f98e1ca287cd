//! Count alternating sign matrices and print the small ones.

use asmprism::Asm;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 1..=max {
        println!("|ASM({n})| = {}", Asm::count(n));
    }
    println!();
    for a in Asm::enumerate(3) {
        println!("{a}");
    }
}
