//! The square word, plus diagrams, pipe dreams and Schubert polynomials,
//! facets of the subword complex of an ASM, and the map from prism
//! tableaux to plus diagrams.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{Monomial, Polynomial};
use crate::asm::{Asm, GridCell};
use crate::error::{Error, Result};
use crate::perm::{min_perm_set, perm_set, Perm, Word};
use crate::prism::{
    enumerate_all_prism, find_unstable_triple, prism_set_with, prism_weight, PrismShapeSpec,
    PrismTableau, UnstableRule,
};

/// Largest grid side that fits the bitset representation.
pub const MAX_GRID: usize = 11;

/// A subset of the `n x n` grid, stored as a bitset in row-major order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlusDiagram {
    n: usize,
    bits: u128,
}

impl PlusDiagram {
    pub fn empty(n: usize) -> Result<PlusDiagram> {
        if n > MAX_GRID {
            return Err(Error::GridTooLarge(n, MAX_GRID));
        }
        Ok(PlusDiagram { n, bits: 0 })
    }

    pub fn from_cells<I: IntoIterator<Item = GridCell>>(n: usize, cells: I) -> Result<PlusDiagram> {
        let mut p = PlusDiagram::empty(n)?;
        for c in cells {
            p.try_insert(c)?;
        }
        Ok(p)
    }

    /// The grid with every cell a plus.
    pub fn full(n: usize) -> Result<PlusDiagram> {
        let mut p = PlusDiagram::empty(n)?;
        p.bits = if n == 0 { 0 } else { u128::MAX >> (128 - n * n) };
        Ok(p)
    }

    pub(crate) fn from_bits(n: usize, bits: u128) -> PlusDiagram {
        PlusDiagram { n, bits }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    fn index(&self, c: GridCell) -> Option<usize> {
        (c.row >= 1 && c.col >= 1 && c.row <= self.n && c.col <= self.n)
            .then(|| (c.row - 1) * self.n + (c.col - 1))
    }

    pub fn contains(&self, c: GridCell) -> bool {
        self.index(c).is_some_and(|k| self.bits >> k & 1 == 1)
    }

    pub fn try_insert(&mut self, c: GridCell) -> Result<()> {
        let k = self.index(c).ok_or(Error::OutsideGrid {
            row: c.row,
            col: c.col,
            n: self.n,
        })?;
        self.bits |= 1 << k;
        Ok(())
    }

    pub fn insert(&mut self, c: GridCell) {
        self.try_insert(c).expect("cell inside grid");
    }

    pub fn remove(&mut self, c: GridCell) {
        if let Some(k) = self.index(c) {
            self.bits &= !(1 << k);
        }
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = GridCell> + '_ {
        let n = self.n;
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(GridCell::new(k / n + 1, k % n + 1))
        })
    }

    pub fn complement(&self) -> PlusDiagram {
        let full = PlusDiagram::full(self.n).expect("size already checked");
        PlusDiagram {
            n: self.n,
            bits: full.bits & !self.bits,
        }
    }

    pub fn is_subset(&self, other: &PlusDiagram) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &PlusDiagram) -> PlusDiagram {
        assert_eq!(self.n, other.n);
        PlusDiagram {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    /// `prod x_i^{(pluses in row i)}`.
    pub fn weight(&self) -> Monomial {
        Monomial::from_vars(self.cells().map(|c| c.row))
    }

    /// Letters in the reading order of the square word.
    pub fn word(&self) -> Word {
        let sq = square_word(self.n);
        Word {
            letters: sq
                .order
                .iter()
                .filter(|c| self.contains(**c))
                .map(|c| c.row + c.col - 1)
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<PlusDiagram> {
        let rows: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let n = rows.len();
        let mut p = PlusDiagram::empty(n)?;
        for (r, (lineno, line)) in rows.iter().enumerate() {
            if line.chars().count() != n {
                return Err(Error::Parse {
                    line: *lineno,
                    col: 1,
                    msg: format!("expected {n} cells"),
                });
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '+' => p.insert(GridCell::new(r + 1, c + 1)),
                    '.' => {}
                    _ => {
                        return Err(Error::Parse {
                            line: *lineno,
                            col: c + 1,
                            msg: format!("unexpected character {ch:?}"),
                        })
                    }
                }
            }
        }
        Ok(p)
    }
}

impl PartialOrd for PlusDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the sorted cell list.
impl Ord for PlusDiagram {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.cells().cmp(other.cells()))
    }
}

impl fmt::Display for PlusDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            let row: String = (1..=self.n)
                .map(|j| if self.contains(GridCell::new(i, j)) { '+' } else { '.' })
                .collect();
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// The word `Q_{n x n}`: cell `(i,j)` carries `s_{i+j-1}`, read along rows
/// from right to left starting with the top row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareWord {
    pub n: usize,
    pub order: Vec<GridCell>,
}

impl SquareWord {
    pub fn letter(&self, c: GridCell) -> usize {
        c.row + c.col - 1
    }

    pub fn word(&self) -> Word {
        Word {
            letters: self.order.iter().map(|&c| self.letter(c)).collect(),
        }
    }
}

pub fn square_word(n: usize) -> SquareWord {
    SquareWord {
        n,
        order: (1..=n)
            .flat_map(|i| (1..=n).rev().map(move |j| GridCell::new(i, j)))
            .collect(),
    }
}

/// Demazure product of the letters of `p` in square-word reading order.
pub fn diagram_demazure(p: &PlusDiagram) -> Perm {
    p.word().demazure_product()
}

/// A facet `F_P = Q - P` of a subword complex, recorded by its plus
/// diagram `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub diagram: PlusDiagram,
}

impl Facet {
    pub fn weight(&self) -> Monomial {
        self.diagram.weight()
    }

    /// The cells of the face itself.
    pub fn face(&self) -> PlusDiagram {
        self.diagram.complement()
    }
}

/// Pipe dreams of `w` in the `n x n` grid, by ladder moves from the bottom
/// pipe dream.
pub fn pipe_dreams_of(w: &Perm, n: usize) -> Result<BTreeSet<PlusDiagram>> {
    let w = w.reduced();
    if w.n() > n {
        return Err(Error::SizeMismatch(w.n(), n));
    }
    let w = w.embed_to(n);
    let mut bottom = PlusDiagram::empty(n)?;
    for (i, &c) in w.lehmer_code().iter().enumerate() {
        for j in 1..=c {
            bottom.insert(GridCell::new(i + 1, j));
        }
    }
    let mut seen = BTreeSet::from([bottom]);
    let mut queue = VecDeque::from([bottom]);
    while let Some(p) = queue.pop_front() {
        for q in ladder_moves(&p) {
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    Ok(seen)
}

fn ladder_moves(p: &PlusDiagram) -> Vec<PlusDiagram> {
    let n = p.n();
    let mut out = Vec::new();
    for c in p.cells() {
        let (i, j) = (c.row, c.col);
        if j + 1 > n || p.contains(GridCell::new(i, j + 1)) {
            continue;
        }
        let mut k = i;
        while k > 1 {
            k -= 1;
            let left = p.contains(GridCell::new(k, j));
            let right = p.contains(GridCell::new(k, j + 1));
            if left && right {
                continue;
            }
            if !left && !right {
                let mut q = *p;
                q.remove(c);
                q.insert(GridCell::new(k, j + 1));
                out.push(q);
            }
            break;
        }
    }
    out
}

/// `𝔖_w` as the weighted sum over pipe dreams in the `n x n` grid.
pub fn schubert_polynomial(w: &Perm, n: usize) -> Result<Polynomial> {
    Ok(Polynomial::from_monomials(
        pipe_dreams_of(w, n)?.iter().map(PlusDiagram::weight),
    ))
}

/// The divided difference `∂_i`.
pub fn divided_difference(p: &Polynomial, i: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        let (a, b) = (m.exponent(i), m.exponent(i + 1));
        if a == b {
            continue;
        }
        let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
        let len = m.exponents().len().max(i + 1);
        for k in 0..hi - lo {
            let mut e: Vec<u32> = (1..=len).map(|v| m.exponent(v)).collect();
            e[i - 1] = hi - 1 - k;
            e[i] = lo + k;
            out.add_term(Monomial::new(e), c * BigInt::from(sign));
        }
    }
    out
}

/// `𝔖_w` from the top class `x1^{m-1} x2^{m-2} ...` of `S_m` by divided
/// differences.
pub fn schubert_oracle(w: &Perm) -> Polynomial {
    let w = w.reduced();
    let m = w.n().max(1);
    let mut memo: HashMap<Vec<usize>, Polynomial> = HashMap::new();
    schubert_rec(&w.embed_to(m), m, &mut memo)
}

fn schubert_rec(w: &Perm, m: usize, memo: &mut HashMap<Vec<usize>, Polynomial>) -> Polynomial {
    if let Some(p) = memo.get(w.one_line()) {
        return p.clone();
    }
    let ascent = (1..m).find(|&i| w.apply(i) < w.apply(i + 1));
    let p = match ascent {
        None => Polynomial::from(Monomial::new((1..m).rev().map(|e| e as u32).collect())),
        Some(i) => divided_difference(&schubert_rec(&w.mul_simple(i), m, memo), i),
    };
    memo.insert(w.one_line().to_vec(), p.clone());
    p
}

/// Facets of `Δ(Q_{n x n}, A)`: pipe dreams of every `w` in `Perm(A)`.
pub fn delta_facets(a: &Asm) -> BTreeSet<Facet> {
    facets_over(a.n(), perm_set(a).iter())
}

/// Facets of maximal dimension: pipe dreams of `MinPerm(A)`.
pub fn delta_fmax(a: &Asm) -> BTreeSet<Facet> {
    facets_over(a.n(), min_perm_set(a).iter())
}

fn facets_over<'a>(n: usize, perms: impl Iterator<Item = &'a Perm>) -> BTreeSet<Facet> {
    perms
        .flat_map(|w| pipe_dreams_of(w, n).expect("Perm(A) lies in S_n"))
        .map(|diagram| Facet { diagram })
        .collect()
}

/// `Φ`: label `t` at cell `(a,b)` becomes a plus at `(t, a+b-t)`; the
/// components are overlaid.
pub fn phi(t: &PrismTableau, n: usize) -> Result<PlusDiagram> {
    let mut p = PlusDiagram::empty(n)?;
    for (_, cell, v) in t.labelled_cells() {
        let v = v as usize;
        let row = v;
        let col = (cell.row + cell.col).checked_sub(v).filter(|&c| c >= 1).ok_or(
            Error::OutsideGrid {
                row: v,
                col: 0,
                n,
            },
        )?;
        p.try_insert(GridCell::new(row, col))?;
    }
    Ok(p)
}

/// Outcome of checking the prism/facet correspondence for one shape.
#[derive(Clone, Debug, Default)]
pub struct BijectionReport {
    pub n: usize,
    pub all_prism: usize,
    pub facet_tableaux: usize,
    pub facets: usize,
    pub fmax: usize,
    pub prism: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for BijectionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} all={} facet-tableaux={} facets={} fmax={} prism={}",
            self.n, self.all_prism, self.facet_tableaux, self.facets, self.fmax, self.prism
        )?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

pub fn verify_bijection(spec: &PrismShapeSpec) -> BijectionReport {
    verify_bijection_with(spec, UnstableRule::DistinctColors)
}

pub fn verify_bijection_with(spec: &PrismShapeSpec, rule: UnstableRule) -> BijectionReport {
    let a = spec.asm();
    let n = a.n();
    let facets: BTreeSet<PlusDiagram> = delta_facets(&a).into_iter().map(|f| f.diagram).collect();
    let fmax: BTreeSet<PlusDiagram> = delta_fmax(&a).into_iter().map(|f| f.diagram).collect();
    let mut report = BijectionReport {
        n,
        facets: facets.len(),
        fmax: fmax.len(),
        ..Default::default()
    };

    let mut fibers: HashMap<PlusDiagram, Vec<PrismTableau>> = HashMap::new();
    for t in enumerate_all_prism(spec) {
        report.all_prism += 1;
        match phi(&t, n) {
            Ok(p) => {
                if facets.contains(&p) {
                    fibers.entry(p).or_default().push(t);
                }
            }
            Err(e) => report.failures.push(format!("tableau {t}: {e}")),
        }
    }
    report.facet_tableaux = fibers.values().map(Vec::len).sum();

    for p in &facets {
        let Some(fiber) = fibers.get(p) else {
            report
                .failures
                .push(format!("facet {:?} is not an image", p.cells().collect::<Vec<_>>()));
            continue;
        };
        let stable: Vec<&PrismTableau> = fiber
            .iter()
            .filter(|t| find_unstable_triple(t, rule).is_none())
            .collect();
        if stable.len() != 1 {
            report.failures.push(format!(
                "facet {:?} has {} stable tableaux in its fiber",
                p.cells().collect::<Vec<_>>(),
                stable.len()
            ));
            continue;
        }
        let top = fiber[1..]
            .iter()
            .fold(fiber[0].clone(), |acc, t| acc.entrywise_max(t));
        if *stable[0] != top {
            report
                .failures
                .push(format!("stable tableau {} is not the fiber maximum {top}", stable[0]));
        }
        if prism_weight(stable[0]) != p.weight() {
            report
                .failures
                .push(format!("tableau {} changes weight under the map", stable[0]));
        }
    }

    let prism = prism_set_with(spec, rule);
    report.prism = prism.len();
    let mut images = BTreeSet::new();
    for t in &prism {
        match phi(t, n) {
            Ok(p) => {
                if !images.insert(p) {
                    report.failures.push(format!("prism tableau {t} collides with another"));
                }
            }
            Err(e) => report.failures.push(format!("tableau {t}: {e}")),
        }
    }
    if images != fmax {
        report.failures.push(format!(
            "prism image ({} diagrams) differs from the maximal facets ({})",
            images.len(),
            fmax.len()
        ));
    }
    report
}
