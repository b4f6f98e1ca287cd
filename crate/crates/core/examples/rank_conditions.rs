//! Northwest rank conditions and the ASM they define.

use asmprism::asm::asm_from_rank_conditions;

fn main() {
    // rank(Z_{[2],[2]}) <= 0 and rank(Z_{[3],[3]}) <= 1
    let mut conds = vec![vec![None; 4]; 4];
    conds[1][1] = Some(0);
    conds[2][2] = Some(1);
    let p = asm_from_rank_conditions(&conds).unwrap();
    print!("{p}");
    println!("corner sums:\n{}", p.corner_sum());
    let a = p.canonical_completion();
    print!("completed:\n{a}");
    let ess: Vec<String> = a.essential_set().iter().map(|c| c.to_string()).collect();
    println!("essential set: {}", ess.join(" "));
}
