//! Antidiagonal initial ideal of an ASM variety and its Stanley-Reisner
//! complex, compared with the subword complex.

use std::collections::BTreeSet;

use asmprism::ideal::{essential_generators, initial_ideal, multidegree, stanley_reisner_facets};
use asmprism::pipedream::delta_facets;
use asmprism::Asm;

fn main() {
    let a = Asm::parse("0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n").unwrap();
    print!("{a}");
    println!("minors:");
    for m in essential_generators(&a) {
        println!("  {m}");
    }
    let init = initial_ideal(&a);
    println!("initial ideal:");
    for g in &init {
        println!("  {g}");
    }
    let sr = stanley_reisner_facets(&init, a.n());
    let faces: BTreeSet<_> = delta_facets(&a).iter().map(|f| f.face()).collect();
    println!("{} facets, equal to the subword complex: {}", sr.facets.len(), sr.facets == faces);
    println!("multidegree: {}", multidegree(&a));
}
