//! Pipe dreams of a permutation and its Schubert polynomial.

use asmprism::pipedream::{pipe_dreams_of, schubert_oracle, schubert_polynomial, square_word};
use asmprism::Perm;

fn main() {
    let w: Perm = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "1 4 3 2".into())
        .parse()
        .expect("a permutation in one-line notation");
    let n = w.n();
    println!("square word of size {n}: {}", square_word(n).word());
    let dreams = pipe_dreams_of(&w, n).unwrap();
    for p in &dreams {
        println!("{p}word {}  weight {}\n", p.word(), p.weight());
    }
    println!("{} pipe dreams", dreams.len());
    let s = schubert_polynomial(&w, n).unwrap();
    println!("S_w = {s}");
    println!("divided differences agree: {}", s == schubert_oracle(&w));
}
