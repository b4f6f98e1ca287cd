//! Exhaustive checks over `ASM(n)` of the identities tying the prism,
//! pipe-dream, lattice and ideal sides together.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::algebra::{Monomial, Polynomial};
use crate::asm::{Asm, CornerSum};
use crate::ideal::{initial_ideal, multidegree, stanley_reisner_facets};
use crate::perm::{
    bigr_of, bigrassmannian_encode, bruhat_leq, deg, is_bigrassmannian, min_perm_set, Perm,
};
use crate::pipedream::{delta_facets, schubert_oracle, schubert_polynomial, verify_bijection_with};
use crate::prism::{
    asm_polynomial, asm_polynomial_with, min_prism_degree, Model, Partition, PrismShapeSpec,
    UnstableRule,
};

/// Result of one exhaustive check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub unit: &'static str,
    pub suffix: &'static str,
    pub total: usize,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.total
    }

    fn from_results(
        name: &'static str,
        unit: &'static str,
        suffix: &'static str,
        results: Vec<Vec<String>>,
    ) -> CheckReport {
        let total = results.len();
        let passed = results.iter().filter(|r| r.is_empty()).count();
        CheckReport {
            name,
            unit,
            suffix,
            total,
            passed,
            failures: results.into_iter().flatten().collect(),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "OK" } else { "FAIL" };
        write!(f, "{status}: {}/{} {}", self.passed, self.total, self.unit)?;
        if !self.suffix.is_empty() {
            write!(f, ", {}", self.suffix)?;
        }
        Ok(())
    }
}

/// One-line rendering of an ASM for messages.
pub fn asm_line(a: &Asm) -> String {
    a.rows()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Run `f` on a pool with at most `jobs` workers (all cores when `None`).
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    pool.install(f)
}

/// Per-ASM check in parallel; results keep enumeration order.
fn per_asm(n: usize, check: impl Fn(&Asm) -> Vec<String> + Sync + Send) -> Vec<Vec<String>> {
    let all: Vec<Asm> = Asm::enumerate(n).collect();
    all.par_iter().map(check).collect()
}

/// `Σ_{w ∈ MinPerm(A)} 𝔖_w` from pipe dreams.
pub fn schubert_sum(a: &Asm) -> Polynomial {
    min_perm_set(a)
        .iter()
        .map(|w| schubert_polynomial(w, a.n()).expect("MinPerm(A) lies in S_n"))
        .sum()
}

/// Both prism models give `Σ_{MinPerm(A)} 𝔖_w`, for every ASM of size `n`.
pub fn theorem1(n: usize, rule: UnstableRule) -> CheckReport {
    let results = per_asm(n, |a| {
        let expected = schubert_sum(a);
        Model::BOTH
            .iter()
            .filter_map(|&m| {
                let got = asm_polynomial_with(&m.spec(a), rule);
                (got != expected).then(|| {
                    format!(
                        "{} model of [{}]: prism gives {got}, Schubert sum is {expected}",
                        m.name(),
                        asm_line(a)
                    )
                })
            })
            .collect()
    });
    CheckReport::from_results("theorem1", "ASMs", "both models", results)
}

/// The prism/facet correspondence for both models of every ASM.
pub fn bijection(n: usize, rule: UnstableRule) -> CheckReport {
    let results = per_asm(n, |a| {
        Model::BOTH
            .iter()
            .filter_map(|&m| {
                let report = verify_bijection_with(&m.spec(a), rule);
                (!report.passed())
                    .then(|| format!("{} model of [{}]: {report}", m.name(), asm_line(a)))
            })
            .collect()
    });
    CheckReport::from_results("bijection", "ASMs", "both models", results)
}

/// Stanley-Reisner facets of the initial ideal are the complements of the
/// pipe-dream facets.
pub fn groebner_one(a: &Asm) -> Vec<String> {
    let sr: BTreeSet<_> = stanley_reisner_facets(&initial_ideal(a), a.n()).facets;
    let faces: BTreeSet<_> = delta_facets(a).iter().map(|f| f.face()).collect();
    if sr == faces {
        Vec::new()
    } else {
        vec![format!(
            "[{}]: {} Stanley-Reisner facets vs {} subword facets",
            asm_line(a),
            sr.len(),
            faces.len()
        )]
    }
}

pub fn groebner(n: usize) -> CheckReport {
    CheckReport::from_results("groebner", "ASMs", "", per_asm(n, groebner_one))
}

/// Lattice and base properties of `ASM(n)`: closure and least/greatest
/// bound properties of join and meet, `A = ∨ biGr(A)`, the antichain
/// property, both descriptions of the essential set and of the diagram,
/// and the meet description of biGrassmannians.
pub fn lattice(n: usize) -> CheckReport {
    let all: Vec<Asm> = Asm::enumerate(n).collect();
    let sums: Vec<CornerSum> = all.iter().map(Asm::corner_sum).collect();
    let bases: Vec<Perm> = Perm::all(n)
        .into_iter()
        .filter(|w| !w.is_identity() && is_bigrassmannian(w))
        .collect();

    let results: Vec<Vec<String>> = all
        .par_iter()
        .enumerate()
        .map(|(ia, a)| {
            let mut errs = Vec::new();
            let ra = &sums[ia];
            for (ib, b) in all.iter().enumerate() {
                let rb = &sums[ib];
                let (j, m) = (a.join(b), a.meet(b));
                if j.corner_sum() != ra.entrywise_min(rb) || j.corner_sum().check_asm().is_err() {
                    errs.push(format!("join closure fails for [{}] and [{}]", asm_line(a), asm_line(b)));
                }
                if m.corner_sum() != ra.entrywise_max(rb) || m.corner_sum().check_asm().is_err() {
                    errs.push(format!("meet closure fails for [{}] and [{}]", asm_line(a), asm_line(b)));
                }
                if j != b.join(a) || m != b.meet(a) {
                    errs.push(format!("commutativity fails at [{}]", asm_line(a)));
                }
                if a.join(&a.meet(b)) != *a || a.meet(&a.join(b)) != *a {
                    errs.push(format!("absorption fails at [{}]", asm_line(a)));
                }
                // least upper bound and greatest lower bound
                let (rj, rm) = (j.corner_sum(), m.corner_sum());
                for rc in &sums {
                    if ra.dominates(rc) && rb.dominates(rc) && !rj.dominates(rc) {
                        errs.push(format!("join of [{}], [{}] is not least", asm_line(a), asm_line(b)));
                    }
                    if rc.dominates(ra) && rc.dominates(rb) && !rc.dominates(&rm) {
                        errs.push(format!("meet of [{}], [{}] is not greatest", asm_line(a), asm_line(b)));
                    }
                }
            }
            if a.join(a) != *a || a.meet(a) != *a {
                errs.push(format!("idempotence fails at [{}]", asm_line(a)));
            }

            let bigr = bigr_of(a);
            let joined = Asm::join_all(n, bigr.iter().map(Perm::to_asm).collect::<Vec<_>>().iter());
            if joined != *a {
                errs.push(format!("[{}] is not the join of its biGrassmannians", asm_line(a)));
            }
            for u in &bigr {
                for v in &bigr {
                    if u != v && bruhat_leq(u, v) {
                        errs.push(format!("biGr([{}]) is not an antichain", asm_line(a)));
                    }
                }
            }
            let below: Vec<&Perm> = bases.iter().filter(|b| b.to_asm().leq(a)).collect();
            let maximal: BTreeSet<Perm> = below
                .iter()
                .filter(|b| !below.iter().any(|c| c != *b && bruhat_leq(b, c)))
                .map(|b| (*b).clone())
                .collect();
            if maximal != bigr {
                errs.push(format!("biGr([{}]) differs from the maximal biGrassmannians below it", asm_line(a)));
            }
            if a.essential_set() != a.essential_set_by_rank() {
                errs.push(format!("essential set descriptions differ for [{}]", asm_line(a)));
            }
            let r = a.corner_sum();
            let by_rank: BTreeSet<_> = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .filter(|&(i, j)| r.get(i, j) == r.get(i - 1, j) && r.get(i, j) == r.get(i, j - 1))
                .map(crate::asm::GridCell::from)
                .collect();
            if by_rank != a.rothe_diagram() {
                errs.push(format!("diagram descriptions differ for [{}]", asm_line(a)));
            }
            errs
        })
        .collect();

    let mut meet_errs = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for rank in 0..i.min(j) {
                if i + j - rank > n {
                    continue;
                }
                let u = bigrassmannian_encode(i, j, rank, n).expect("valid triple");
                let m = sums
                    .iter()
                    .filter(|r| r.get(i, j) as usize <= rank)
                    .fold(None, |acc: Option<CornerSum>, r| {
                        Some(acc.map_or_else(|| r.clone(), |x| x.entrywise_max(r)))
                    });
                let ok = m
                    .and_then(|m| Asm::from_corner_sum(&m).ok())
                    .is_some_and(|m| m == u.to_asm());
                if !ok {
                    meet_errs.push(format!("[{i},{j},{rank}]_b is not the meet of its rank set"));
                }
            }
        }
    }
    let mut report = CheckReport::from_results("lattice", "ASMs", "", results);
    report.failures.extend(meet_errs);
    report
}

/// Ordinary semistandard tableaux generating function, used as an
/// independent Schur polynomial.
pub fn schur_oracle(lambda: &Partition, d: usize) -> Polynomial {
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (0..lambda.part(r + 1) as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut out = Polynomial::zero();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        d: usize,
        out: &mut Polynomial,
    ) {
        if idx == cells.len() {
            *out += Polynomial::from(Monomial::from_vars(grid.iter().flatten().copied()));
            return;
        }
        let (r, c) = cells[idx];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..=d {
            grid[r][c] = v;
            rec(idx + 1, cells, grid, d, out);
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, &mut grid, d, &mut out);
    out
}

/// Partitions fitting in a `rows x cols` box.
pub fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
        if cur.len() == rows {
            return;
        }
        for v in 1..=max {
            cur.push(v);
            rec(rows, v, cur, out);
            cur.pop();
        }
    }
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Single-shape prism polynomials are Schur polynomials, for `lambda`
/// inside the `n x n` box and `d <= n`.
pub fn schur(n: usize) -> CheckReport {
    let mut results = Vec::new();
    for lambda in partitions_in_box(n, n as u32) {
        for d in lambda.len().max(1)..=n {
            let spec = PrismShapeSpec::new(vec![lambda.clone()], vec![d]).expect("fits");
            let got = asm_polynomial(&spec);
            let want = schur_oracle(&lambda, d);
            results.push(if got == want {
                Vec::new()
            } else {
                vec![format!("shape {lambda}, d={d}: prism gives {got}, Schur is {want}")]
            });
        }
    }
    CheckReport::from_results("schur", "shapes", "", results)
}

/// `deg(A)` from `Perm(A)` agrees with the minimal prism degree of both
/// models.
pub fn degree(n: usize) -> CheckReport {
    let results = per_asm(n, |a| {
        let d = deg(a) as u64;
        Model::BOTH
            .iter()
            .filter_map(|&m| {
                let p = min_prism_degree(&m.spec(a));
                (p != d).then(|| format!("{} model of [{}]: prism degree {p}, deg {d}", m.name(), asm_line(a)))
            })
            .collect()
    });
    CheckReport::from_results("deg", "ASMs", "both models", results)
}

/// The multidegree from Stanley-Reisner facets equals the prism polynomial
/// of both models.
pub fn multidegree_check(n: usize) -> CheckReport {
    let results = per_asm(n, |a| {
        let md = multidegree(a);
        Model::BOTH
            .iter()
            .filter_map(|&m| {
                let p = asm_polynomial(&m.spec(a));
                (p != md).then(|| format!("{} model of [{}]: prism {p}, multidegree {md}", m.name(), asm_line(a)))
            })
            .collect()
    });
    CheckReport::from_results("multidegree", "ASMs", "both models", results)
}

/// Pipe-dream Schubert polynomials agree with divided differences on `S_n`.
pub fn schubert(n: usize) -> CheckReport {
    let perms = Perm::all(n);
    let results = perms
        .par_iter()
        .map(|w| {
            let a = schubert_polynomial(w, n).expect("w in S_n");
            let b = schubert_oracle(w);
            if a == b {
                Vec::new()
            } else {
                vec![format!("{w}: pipe dreams {a}, divided differences {b}")]
            }
        })
        .collect();
    CheckReport::from_results("schubert", "permutations", "", results)
}

/// Names accepted by [`run_check`].
pub const CHECKS: [&str; 8] = [
    "theorem1",
    "bijection",
    "groebner",
    "lattice",
    "schur",
    "deg",
    "multidegree",
    "schubert",
];

pub fn run_check(name: &str, n: usize, rule: UnstableRule) -> Option<CheckReport> {
    Some(match name {
        "theorem1" => theorem1(n, rule),
        "bijection" => bijection(n, rule),
        "groebner" => groebner(n),
        "lattice" => lattice(n),
        "schur" => schur(n),
        "deg" => degree(n),
        "multidegree" => multidegree_check(n),
        "schubert" => schubert(n),
        _ => return None,
    })
}
