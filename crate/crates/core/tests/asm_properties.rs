use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use asmprism::asm::{asm_from_rank_conditions, partial_bigrassmannian_corner_sum};
use asmprism::{Asm, CornerSum, GridCell, PartialAsm};

fn all(n: usize) -> Vec<Asm> {
    Asm::enumerate(n).collect()
}

/// Product formula `prod_{j<n} (3j+1)! / (n+j)!`.
fn asm_count_formula(n: u64) -> u128 {
    let fact = |k: u64| (1..=k as u128).product::<u128>();
    let mut num = 1u128;
    let mut den = 1u128;
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    num / den
}

#[test]
fn counts_match_product_formula() {
    for n in 1..=6 {
        let seen: HashSet<Asm> = Asm::enumerate(n).collect();
        assert_eq!(seen.len() as u128, asm_count_formula(n as u64), "n = {n}");
        assert_eq!(Asm::count(n) as u128, asm_count_formula(n as u64));
    }
}

/// Brute force over all `{-1,0,1}` matrices, feasible for n <= 3.
#[test]
fn enumeration_matches_raw_search() {
    for n in 1..=3 {
        let cells = n * n;
        let mut found = HashSet::new();
        for code in 0..3usize.pow(cells as u32) {
            let mut c = code;
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = (c % 3) as i64 - 1;
                            c /= 3;
                            v
                        })
                        .collect()
                })
                .collect();
            if let Ok(a) = Asm::validate(&m) {
                found.insert(a);
            }
        }
        let ours: HashSet<Asm> = Asm::enumerate(n).collect();
        assert_eq!(ours, found, "n = {n}");
    }
}

#[test]
fn corner_sum_round_trip() {
    for n in 1..=4 {
        for a in all(n) {
            let r = a.corner_sum();
            r.check_asm().unwrap();
            assert_eq!(Asm::from_corner_sum(&r).unwrap().rows(), a.rows());
        }
    }
}

#[test]
fn lattice_axioms_on_asm4() {
    let asms = all(4);
    for a in &asms {
        assert_eq!(&a.join(a), a);
        assert_eq!(&a.meet(a), a);
        for b in &asms {
            let j = a.join(b);
            let m = a.meet(b);
            assert_eq!(j, b.join(a));
            assert_eq!(m, b.meet(a));
            assert_eq!(&a.join(&m), a);
            assert_eq!(&a.meet(&j), a);
            j.corner_sum().check_asm().unwrap();
            m.corner_sum().check_asm().unwrap();
        }
    }
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..2000 {
        let a = asms.choose(&mut rng).unwrap();
        let b = asms.choose(&mut rng).unwrap();
        let c = asms.choose(&mut rng).unwrap();
        assert_eq!(a.join(&b.join(c)), a.join(b).join(c));
        assert_eq!(a.meet(&b.meet(c)), a.meet(b).meet(c));
    }
}

#[test]
fn essential_set_and_diagram_descriptions_agree() {
    for a in all(4) {
        assert_eq!(a.essential_set(), a.essential_set_by_rank());
        let r = a.corner_sum();
        for i in 1..=4 {
            for j in 1..=4 {
                let by_rank = r.get(i, j) == r.get(i - 1, j) && r.get(i, j) == r.get(i, j - 1);
                assert_eq!(a.rothe_diagram().contains(&GridCell::new(i, j)), by_rank);
            }
        }
    }
}

#[test]
fn monotone_triangle_determines_corner_sum() {
    for a in all(4) {
        let m = a.monotone_triangle();
        for (i, row) in m.rows.iter().enumerate() {
            assert_eq!(row.len(), i + 1);
            assert!(row.windows(2).all(|w| w[0] < w[1]));
        }
        assert_eq!(m.to_corner_sum(), a.corner_sum());
        assert_eq!(m.to_asm(), a);
    }
}

#[test]
fn lambda_rows_fit_their_boxes() {
    for a in all(5) {
        for l in 1..=5 {
            let lam = a.lambda_row(l);
            assert!(lam.len() <= l);
            assert!(lam.part(1) as usize <= 5 - l);
        }
    }
}

#[test]
fn order_matches_lambda_containment() {
    let asms = all(4);
    for a in &asms {
        for b in &asms {
            let contained = (1..=4).all(|i| b.lambda_row(i).contains(&a.lambda_row(i)));
            assert_eq!(a.leq(b), contained);
        }
    }
}

#[test]
fn embedding_is_an_order_embedding() {
    let asms = all(3);
    for a in &asms {
        let ea = a.embed();
        assert_eq!(ea.rothe_diagram(), a.rothe_diagram());
        assert_eq!(ea.essential_set(), a.essential_set());
        for b in &asms {
            assert_eq!(a.leq(b), ea.leq(&b.embed()));
            assert_eq!(a.embed_to(6).leq(&b.embed_to(5)), a.leq(b));
        }
    }
}

#[test]
fn completion_is_an_asm_with_the_input_in_its_corner() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut checked = 0;
    while checked < 300 {
        let n = rng.gen_range(1..=4);
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| rng.gen_range(-1..=1)).collect())
            .collect();
        let Ok(p) = PartialAsm::validate(&m) else { continue };
        checked += 1;
        let c = p.canonical_completion();
        assert!(c.n() >= n && c.n() <= 2 * n);
        Asm::validate(&c.rows()).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(c.get(i, j), p.get(i, j));
            }
        }
    }
}

/// Comparing completions agrees with comparing corner sums directly.
#[test]
fn partial_order_via_completions() {
    let mut partials = Vec::new();
    for code in 0..3usize.pow(9) {
        let mut c = code;
        let m: Vec<Vec<i64>> = (0..3)
            .map(|_| {
                (0..3)
                    .map(|_| {
                        let v = (c % 3) as i64 - 1;
                        c /= 3;
                        v
                    })
                    .collect()
            })
            .collect();
        if let Ok(p) = PartialAsm::validate(&m) {
            partials.push(p);
        }
    }
    assert!(partials.len() > 7);
    for p in &partials {
        for q in &partials {
            let via = p.canonical_completion().leq(&q.canonical_completion());
            assert_eq!(p.leq(q), via, "{p}vs\n{q}");
        }
    }
}

fn rank_mod(m: &[Vec<i64>], rows: usize, cols: usize, p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m[..rows]
        .iter()
        .map(|r| r[..cols].iter().map(|v| v.rem_euclid(p)).collect())
        .collect();
    let inv = |x: i64| {
        let (mut b, mut e, mut acc) = (x, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][c]);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * iv % p;
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mat_mul(x: &[Vec<i64>], y: &[Vec<i64>], p: i64) -> Vec<Vec<i64>> {
    let n = x.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| x[i][k] * y[k][j]).sum::<i64>().rem_euclid(p))
                .collect()
        })
        .collect()
}

/// Random matrix with prescribed northwest ranks: `L * pi * U` for a partial
/// permutation `pi`, lower triangular `L` and upper triangular `U`.
fn structured_matrix(rng: &mut StdRng, n: usize, p: i64) -> Vec<Vec<i64>> {
    let mut pi = vec![vec![0; n]; n];
    let mut cols: Vec<usize> = (0..n).collect();
    cols.shuffle(rng);
    for (i, &c) in cols.iter().enumerate() {
        if rng.gen_bool(0.6) {
            pi[i][c] = 1;
        }
    }
    let tri = |rng: &mut StdRng, lower: bool| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            rng.gen_range(1..p)
                        } else if (j < i) == lower {
                            rng.gen_range(0..p)
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let l = tri(rng, true);
    let u = tri(rng, false);
    mat_mul(&mat_mul(&l, &pi, p), &u, p)
}

#[test]
fn rank_conditions_and_their_asm_cut_out_the_same_locus() {
    let p = 101;
    let n = 4;
    let mut rng = StdRng::seed_from_u64(11);
    let mut hits = 0;
    for _ in 0..60 {
        let conds: Vec<Vec<Option<u32>>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j: usize| {
                        rng.gen_bool(0.25)
                            .then(|| rng.gen_range(0..=i.min(j) as u32))
                    })
                    .collect()
            })
            .collect();
        let ar = asm_from_rank_conditions(&conds).unwrap();
        let r = ar.corner_sum();
        for _ in 0..40 {
            let m = structured_matrix(&mut rng, n, p);
            let in_x_r = conds.iter().enumerate().all(|(i, row)| {
                row.iter().enumerate().all(|(j, b)| {
                    b.is_none_or(|b| rank_mod(&m, i + 1, j + 1, p) <= b as usize)
                })
            });
            let in_x_a = (1..=n).all(|i| {
                (1..=n).all(|j| rank_mod(&m, i, j, p) <= r.get(i, j) as usize)
            });
            assert_eq!(in_x_r, in_x_a, "conditions {conds:?}");
            hits += usize::from(in_x_r);
        }
    }
    assert!(hits > 50, "too few sampled points inside the loci: {hits}");
}

#[test]
fn partial_bigrassmannians_are_partial_asms() {
    for n in 1..=4 {
        for i in 1..=n {
            for j in 1..=n {
                for r in 0..=i.min(j) {
                    let cs = partial_bigrassmannian_corner_sum(i, j, r, n);
                    let p = PartialAsm::from_corner_sum(&cs).unwrap();
                    assert!(p.corner_sum().get(i, j) as usize <= r);
                    PartialAsm::validate(&p.rows()).unwrap();
                }
            }
        }
    }
}

#[test]
fn corner_sum_rejects_bad_boundaries() {
    let r = CornerSum::from_rows(&[vec![0, 1], vec![1, 1]]).unwrap();
    assert!(Asm::from_corner_sum(&r).is_err());
}

#[test]
fn different_sizes_compare_by_inclusion() {
    let set: BTreeSet<String> = [Asm::identity(1), Asm::identity(3)]
        .iter()
        .map(|a| a.reduced().to_string())
        .collect();
    assert_eq!(set.len(), 1);
    assert_eq!(Asm::identity(2), Asm::identity(5));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn join_is_an_upper_bound(i in 0usize..429, k in 0usize..429) {
        let asms = all(5);
        let (a, b) = (&asms[i], &asms[k]);
        let j = a.join(b);
        prop_assert!(a.leq(&j) && b.leq(&j));
        let m = a.meet(b);
        prop_assert!(m.leq(a) && m.leq(b));
    }

    #[test]
    fn round_trip_and_embedding_at_size_five(i in 0usize..429) {
        let a = &all(5)[i];
        prop_assert_eq!(&Asm::from_corner_sum(&a.corner_sum()).unwrap(), a);
        let e = a.embed();
        prop_assert_eq!(e.corner_sum().get(6, 6), 6);
        prop_assert_eq!(e.rothe_diagram(), a.rothe_diagram());
    }
}
