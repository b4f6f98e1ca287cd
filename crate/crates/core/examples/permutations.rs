use asmprism::perm::{
    bigr_of, bigrassmannian_encode, deg, grassmannian_decode, grassmannian_encode, min_perm_set,
    perm_set,
};
use asmprism::{Asm, Partition, Perm, Word};

fn main() {
    let q: Word = "2,1,2,3,2".parse().unwrap();
    println!("word {q}: product {}, Demazure product {}", q.product(), q.demazure_product());

    let lambda = Partition::new(vec![2, 1]).unwrap();
    let g = grassmannian_encode(&lambda, 2, 4).unwrap();
    println!("Grassmannian of {lambda} with descent 2: {g}");
    println!("decoded: {:?}", grassmannian_decode(&g).map(|(l, d)| (l.to_string(), d)));
    println!("biGrassmannian [2,3,1] in S_4: {}", bigrassmannian_encode(2, 3, 1, 4).unwrap());

    let a = Asm::parse("0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n").unwrap();
    let show = |ps: &std::collections::BTreeSet<Perm>| {
        ps.iter().map(|p| format!("[{p}]")).collect::<Vec<_>>().join(" ")
    };
    print!("\n{a}");
    println!("biGr(A)    = {}", show(&bigr_of(&a)));
    println!("Perm(A)    = {}", show(&perm_set(&a)));
    println!("MinPerm(A) = {}", show(&min_perm_set(&a)));
    println!("deg(A)     = {}", deg(&a));
}
