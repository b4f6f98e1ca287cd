//! Generators of ASM ideals as minors, their antidiagonal initial terms,
//! Stanley-Reisner facets via minimal hitting sets, and the multidegree.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Monomial, Polynomial};
use crate::asm::{Asm, GridCell};
use crate::pipedream::PlusDiagram;

/// A `k x k` minor of the generic matrix `Z`, with rows taken from `[i]` and
/// columns from `[j]` for the region cell `(i,j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorSpec {
    pub region: GridCell,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSpec {
    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

impl fmt::Display for MinorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(usize::to_string).collect();
        let cols: Vec<String> = self.cols.iter().map(usize::to_string).collect();
        write!(f, "det Z[{}; {}]", rows.join(","), cols.join(","))
    }
}

/// A product of distinct variables `z_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareFreeMonomial {
    pub support: PlusDiagram,
}

impl SquareFreeMonomial {
    pub fn divides(&self, other: &SquareFreeMonomial) -> bool {
        self.support.is_subset(&other.support)
    }
}

impl fmt::Display for SquareFreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return f.write_str("1");
        }
        let vars: Vec<String> = self
            .support
            .cells()
            .map(|c| format!("z[{}][{}]", c.row, c.col))
            .collect();
        f.write_str(&vars.join("*"))
    }
}

/// Facets of a simplicial complex on the grid cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRComplexFacets {
    pub n: usize,
    pub facets: BTreeSet<PlusDiagram>,
}

impl SRComplexFacets {
    /// Facets of maximum cardinality.
    pub fn top_dimensional(&self) -> impl Iterator<Item = &PlusDiagram> {
        let top = self.facets.iter().map(PlusDiagram::len).max().unwrap_or(0);
        self.facets.iter().filter(move |f| f.len() == top)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            if n - v + 1 < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

fn minors_at(region: GridCell, rank: usize) -> Vec<MinorSpec> {
    let k = rank + 1;
    if k > region.row.min(region.col) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rows in combinations(region.row, k) {
        for cols in combinations(region.col, k) {
            out.push(MinorSpec {
                region,
                rows: rows.clone(),
                cols,
            });
        }
    }
    out
}

/// The `(r_A(i,j)+1)`-minors of `Z_{[i],[j]}` over the essential set.
pub fn essential_generators(a: &Asm) -> Vec<MinorSpec> {
    let r = a.corner_sum();
    a.essential_set()
        .into_iter()
        .flat_map(|c| minors_at(c, r.get(c.row, c.col) as usize))
        .collect()
}

/// The same minors taken over every cell of the grid.
pub fn all_generators(a: &Asm) -> Vec<MinorSpec> {
    let r = a.corner_sum();
    let n = a.n();
    (1..=n)
        .flat_map(|i| (1..=n).map(move |j| GridCell::new(i, j)))
        .flat_map(|c| minors_at(c, r.get(c.row, c.col) as usize))
        .collect()
}

/// The antidiagonal term: the `t`-th smallest row meets the `t`-th largest
/// column.
pub fn antidiagonal_init(m: &MinorSpec, n: usize) -> SquareFreeMonomial {
    let k = m.size();
    let cells = (0..k).map(|t| GridCell::new(m.rows[t], m.cols[k - 1 - t]));
    SquareFreeMonomial {
        support: PlusDiagram::from_cells(n, cells).expect("minor inside grid"),
    }
}

/// Drop every monomial divisible by another one; the result is sorted.
pub fn minimalize(gens: impl IntoIterator<Item = SquareFreeMonomial>) -> Vec<SquareFreeMonomial> {
    let mut all: Vec<SquareFreeMonomial> = gens.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    all.sort_by_key(|g| g.support.len());
    let mut kept: Vec<SquareFreeMonomial> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// Minimal generators of the antidiagonal initial ideal of `I_A`.
pub fn initial_ideal(a: &Asm) -> Vec<SquareFreeMonomial> {
    minimalize(
        essential_generators(a)
            .iter()
            .map(|m| antidiagonal_init(m, a.n())),
    )
}

/// Minimal hitting sets of the supports, by branching on an unhit
/// generator and pruning as soon as a chosen cell loses every generator it
/// alone hits.
pub fn minimal_hitting_sets(gens: &[SquareFreeMonomial]) -> BTreeSet<u128> {
    let edges: Vec<u128> = gens.iter().map(|g| g.support.bits()).collect();
    let mut out = BTreeSet::new();
    if edges.contains(&0) {
        return out;
    }
    fn critical_ok(h: u128, edges: &[u128]) -> bool {
        let mut bits = h;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let private = edges
                .iter()
                .any(|&e| e >> v & 1 == 1 && (e & h).count_ones() == 1);
            if !private {
                return false;
            }
        }
        true
    }
    fn rec(h: u128, edges: &[u128], out: &mut BTreeSet<u128>) {
        let Some(&unhit) = edges.iter().find(|&&e| e & h == 0) else {
            out.insert(h);
            return;
        };
        let mut bits = unhit;
        while bits != 0 {
            let v = bits.trailing_zeros();
            bits &= bits - 1;
            let next = h | 1 << v;
            if critical_ok(next, edges) {
                rec(next, edges, out);
            }
        }
    }
    rec(0, &edges, &mut out);
    out
}

/// Facets of the Stanley-Reisner complex of the ideal generated by `gens`:
/// complements of the minimal hitting sets of their supports.
pub fn stanley_reisner_facets(gens: &[SquareFreeMonomial], n: usize) -> SRComplexFacets {
    let full = PlusDiagram::full(n).expect("grid size");
    let facets = minimal_hitting_sets(gens)
        .into_iter()
        .map(|h| PlusDiagram::from_bits(n, full.bits() & !h))
        .collect();
    SRComplexFacets { n, facets }
}

/// Multidegree of the initial ideal under `deg z_ij = x_i`: the sum over
/// top-dimensional facets of the product of `x_i` over the missing cells.
pub fn multidegree(a: &Asm) -> Polynomial {
    let sr = stanley_reisner_facets(&initial_ideal(a), a.n());
    Polynomial::from_monomials(
        sr.top_dimensional()
            .map(|f| Monomial::from_vars(f.complement().cells().map(|c| c.row))),
    )
}
