//! Prism tableaux for a 4x4 ASM in both shape models.

use asmprism::prism::{asm_polynomial, enumerate_all_prism, min_prism_degree, prism_set, prism_weight};
use asmprism::{Asm, Model};

fn main() {
    let a = Asm::parse("0 0 0 1\n0 1 0 0\n1 -1 1 0\n0 1 0 0\n").unwrap();
    print!("{a}");
    for m in Model::BOTH {
        let spec = m.spec(&a);
        println!("\n{} shape: {spec}", m.name());
        let min = min_prism_degree(&spec);
        for t in enumerate_all_prism(&spec) {
            let w = prism_weight(&t);
            let tag = if w.total_degree() == min { "minimal" } else { "" };
            println!("  {t}  {w}  {tag}");
        }
        println!("kept:");
        for t in prism_set(&spec) {
            println!("  {t}  {}", prism_weight(&t));
        }
        println!("polynomial: {}", asm_polynomial(&spec));
    }
}
