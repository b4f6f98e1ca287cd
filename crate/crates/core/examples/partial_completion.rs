use asmprism::PartialAsm;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "0 1 0\n1 -1 0\n0 1 0".into());
    let p = PartialAsm::parse(&text).expect("a partial ASM");
    print!("partial:\n{p}");
    let c = p.canonical_completion();
    print!("completion ({}x{}):\n{c}", c.n(), c.n());
    let k = p.rows().len();
    let kept = (1..=k).all(|i| (1..=k).all(|j| c.get(i, j) == p.get(i, j)));
    println!("northwest corner kept: {kept}");
}
