use std::collections::BTreeSet;

use asmprism::{Asm, GridCell};

fn cells(cs: &BTreeSet<GridCell>) -> String {
    cs.iter().map(GridCell::to_string).collect::<Vec<_>>().join(" ")
}

fn main() {
    let a = Asm::parse("0 1 0\n1 -1 1\n0 1 0\n").unwrap();
    let b = Asm::parse("0 0 1\n1 0 0\n0 1 0\n").unwrap();
    let c = Asm::parse("0 1 0\n0 0 1\n1 0 0\n").unwrap();

    println!("A =\n{a}\ncorner sums:\n{}", a.corner_sum());
    println!("B ∨ C =\n{}", b.join(&c));
    println!("B ∧ C =\n{}", b.meet(&c));
    println!("A <= B ∨ C: {}", a.leq(&b.join(&c)));

    println!("Rothe diagram: {}", cells(&a.rothe_diagram()));
    println!("essential set: {}", cells(&a.essential_set()));
    println!("monotone triangle: {:?}", a.monotone_triangle().rows);
    for l in 1..=3 {
        println!("lambda row {l}: {}", a.lambda_row(l));
    }

    // every ASM of size 4 is a join of permutation matrices
    let perms: Vec<Asm> = Asm::enumerate(4).filter(Asm::is_permutation).collect();
    let ok = Asm::enumerate(4).all(|x| {
        let above: Vec<Asm> = perms.iter().filter(|p| p.leq(&x)).cloned().collect();
        Asm::join_all(4, above.iter()) == x
    });
    println!("ASM(4) is generated by S_4 under joins: {ok}");
}
