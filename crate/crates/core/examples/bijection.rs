//! The map from prism tableaux to pipe dreams, checked on one ASM.

use asmprism::pipedream::{delta_fmax, phi, verify_bijection};
use asmprism::prism::{prism_set, prism_weight};
use asmprism::{Asm, Model};

fn main() {
    let a = Asm::parse("0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n").unwrap();
    print!("{a}");
    println!("top facets:");
    for f in delta_fmax(&a) {
        println!("{}", f.diagram);
    }
    for m in Model::BOTH {
        let spec = m.spec(&a);
        println!("{} model:", m.name());
        for t in prism_set(&spec) {
            let p = phi(&t, a.n()).unwrap();
            println!("  {t}  {}  ->\n{p}", prism_weight(&t));
        }
        let report = verify_bijection(&spec);
        println!("  {report}\n  passed: {}", report.passed());
    }
}
