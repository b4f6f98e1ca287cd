//! Reverse semistandard tableaux, prism tableaux and their weights, and the
//! ASM polynomial of a prism shape.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Monomial, Polynomial};
use crate::asm::{Asm, GridCell};
use crate::error::{Error, Result};
use crate::perm::asm_from_shape_tuple;

/// A weakly decreasing sequence of positive integers (zeros are dropped).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Partition {
        Partition::default()
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Partition {
        if cols == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![cols as u32; rows],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `lambda_i`, 1-based; zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Young diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition {
            parts: (1..=first)
                .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A reverse semistandard tableau of shape `lambda` with labels in `[d]`,
/// placed so that row `k` of the Young diagram (counting from 1) sits in
/// grid row `d - k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rssyt {
    shape: Partition,
    depth: usize,
    // rows[k] is row k+1 of the Young diagram, the bottom row first
    rows: Vec<Vec<u32>>,
}

impl Rssyt {
    /// Validate a filling given row by row, bottom row first.
    pub fn new(shape: Partition, depth: usize, rows: Vec<Vec<u32>>) -> Result<Rssyt> {
        if shape.len() > depth {
            return Err(Error::DescentTooSmall {
                d: depth,
                len: shape.len(),
            });
        }
        let bad = |msg: String| Err(Error::InvalidTableau(msg));
        if rows.len() != shape.len() {
            return bad(format!("expected {} rows, found {}", shape.len(), rows.len()));
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != shape.part(k + 1) as usize {
                return bad(format!("row {} has length {}", k + 1, row.len()));
            }
            if row.iter().any(|&v| v == 0 || v as usize > depth) {
                return bad(format!("row {} has a label outside [1,{depth}]", k + 1));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return bad(format!("row {} does not weakly decrease", k + 1));
            }
            if k > 0 && row.iter().zip(&rows[k - 1]).any(|(up, down)| up >= down) {
                return bad(format!("column strictness fails above row {k}"));
            }
        }
        Ok(Rssyt { shape, depth, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Rows of the Young diagram, bottom (longest) first.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The label at grid cell `(a,b)`, if occupied.
    pub fn get(&self, a: usize, b: usize) -> Option<u32> {
        if a == 0 || a > self.depth || b == 0 {
            return None;
        }
        self.rows.get(self.depth - a)?.get(b - 1).copied()
    }

    /// `(cell, label)` for every box.
    pub fn cells(&self) -> impl Iterator<Item = (GridCell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(k, row)| {
            row.iter()
                .enumerate()
                .map(move |(b, &v)| (GridCell::new(self.depth - k, b + 1), v))
        })
    }

    /// Whether writing `value` into cell `(a,b)` keeps the tableau valid;
    /// only the neighbours of that cell are inspected.
    pub fn accepts(&self, a: usize, b: usize, value: u32) -> bool {
        if value == 0 || value as usize > self.depth || self.get(a, b).is_none() {
            return false;
        }
        let left_ok = b == 1 || self.get(a, b - 1).is_none_or(|v| v >= value);
        let right_ok = self.get(a, b + 1).is_none_or(|v| v <= value);
        let above_ok = self.get(a - 1, b).is_none_or(|v| v < value);
        let below_ok = self.get(a + 1, b).is_none_or(|v| v > value);
        left_ok && right_ok && above_ok && below_ok
    }

    fn set(&mut self, a: usize, b: usize, value: u32) {
        self.rows[self.depth - a][b - 1] = value;
    }
}

impl fmt::Display for Rssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| {
                r.iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

/// Every reverse semistandard filling of `lambda` with labels in `[d]`.
pub fn enumerate_rssyt(lambda: &Partition, d: usize) -> Result<Vec<Rssyt>> {
    if lambda.len() > d {
        return Err(Error::DescentTooSmall {
            d,
            len: lambda.len(),
        });
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|k| (0..lambda.part(k + 1) as usize).map(move |b| (k, b)))
        .collect();
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&p| vec![0; p as usize]).collect();
    let mut out = Vec::new();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<u32>>,
        d: u32,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if idx == cells.len() {
            out.push(rows.clone());
            return;
        }
        let (k, b) = cells[idx];
        let mut hi = d;
        if b > 0 {
            hi = hi.min(rows[k][b - 1]);
        }
        if k > 0 {
            hi = hi.min(rows[k - 1][b] - 1);
        }
        // rows above still need room for strictly smaller labels
        let above = rows[k + 1..].iter().filter(|r| r.len() > b).count();
        let lo = above as u32 + 1;
        for v in (lo..=hi).rev() {
            rows[k][b] = v;
            rec(idx + 1, cells, rows, d, out);
        }
        rows[k][b] = 0;
    }

    let mut raw = Vec::new();
    rec(0, &cells, &mut rows, d as u32, &mut raw);
    for r in raw {
        out.push(Rssyt {
            shape: lambda.clone(),
            depth: d,
            rows: r,
        });
    }
    out.sort();
    Ok(out)
}

/// A tuple of partitions with descents, `(lambda, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PrismShapeSpec {
    pub lambdas: Vec<Partition>,
    pub ds: Vec<usize>,
}

impl PrismShapeSpec {
    pub fn new(lambdas: Vec<Partition>, ds: Vec<usize>) -> Result<PrismShapeSpec> {
        if lambdas.len() != ds.len() {
            return Err(Error::ShapeLengthMismatch(lambdas.len(), ds.len()));
        }
        for (l, &d) in lambdas.iter().zip(&ds) {
            if d == 0 || l.len() > d {
                return Err(Error::DescentTooSmall { d, len: l.len() });
            }
        }
        Ok(PrismShapeSpec { lambdas, ds })
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// `A_{lambda,d}`.
    pub fn asm(&self) -> Asm {
        asm_from_shape_tuple(&self.lambdas, &self.ds).expect("validated spec")
    }
}

impl fmt::Display for PrismShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.lambdas.iter().map(Partition::to_string).collect();
        let ds: Vec<String> = self.ds.iter().map(usize::to_string).collect();
        write!(f, "({}), ({})", ls.join(","), ds.join(","))
    }
}

/// One RSSYT per component of a shape spec, overlaid on a common grid.
/// Colors are the 1-based component indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrismTableau {
    components: Vec<Rssyt>,
}

impl PrismTableau {
    pub fn new(spec: &PrismShapeSpec, components: Vec<Rssyt>) -> Result<PrismTableau> {
        if components.len() != spec.len() {
            return Err(Error::ShapeLengthMismatch(spec.len(), components.len()));
        }
        for (c, (l, &d)) in components.iter().zip(spec.lambdas.iter().zip(&spec.ds)) {
            if c.shape() != l || c.depth() != d {
                return Err(Error::InvalidTableau(format!(
                    "component {c} does not have shape {l} with d={d}"
                )));
            }
        }
        Ok(PrismTableau { components })
    }

    pub fn components(&self) -> &[Rssyt] {
        &self.components
    }

    /// `(color, cell, label)` for every box of every component.
    pub fn labelled_cells(&self) -> impl Iterator<Item = (usize, GridCell, u32)> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, t)| t.cells().map(move |(cell, v)| (c + 1, cell, v)))
    }

    /// Entrywise comparison of two fillings of the same shape.
    pub fn entrywise_leq(&self, other: &PrismTableau) -> bool {
        self.components.iter().zip(&other.components).all(|(s, o)| {
            s.rows
                .iter()
                .flatten()
                .zip(o.rows.iter().flatten())
                .all(|(a, b)| a <= b)
        })
    }

    /// Entrywise maximum of two fillings of the same shape. The result need
    /// not be a valid prism tableau in general.
    pub fn entrywise_max(&self, other: &PrismTableau) -> PrismTableau {
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(s, o)| Rssyt {
                shape: s.shape.clone(),
                depth: s.depth,
                rows: s
                    .rows
                    .iter()
                    .zip(&o.rows)
                    .map(|(r1, r2)| r1.iter().zip(r2).map(|(a, b)| *a.max(b)).collect())
                    .collect(),
            })
            .collect();
        PrismTableau { components }
    }
}

impl fmt::Display for PrismTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(Rssyt::to_string).collect();
        f.write_str(&parts.join(" | "))
    }
}

/// Labels present on each antidiagonal `a + b - 1`, as bitmasks.
fn antidiagonal_labels(t: &PrismTableau) -> BTreeMap<usize, u64> {
    let mut diag: BTreeMap<usize, u64> = BTreeMap::new();
    for (_, cell, v) in t.labelled_cells() {
        *diag.entry(cell.row + cell.col - 1).or_default() |= 1u64 << v;
    }
    diag
}

/// `prod x_i^{n_i}` where `n_i` counts antidiagonals containing label `i`
/// in any color.
pub fn prism_weight(t: &PrismTableau) -> Monomial {
    let mut m = Monomial::one();
    for mask in antidiagonal_labels(t).values() {
        let mut bits = *mask;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            m.mul_var(v, 1);
            bits &= bits - 1;
        }
    }
    m
}

/// Which colors must carry the smaller label of an unstable triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum UnstableRule {
    /// The label occurs in two distinct colors on the antidiagonal.
    #[default]
    DistinctColors,
    /// A single occurrence suffices.
    Relaxed,
}

/// Whether some antidiagonal carries labels `l` (in color `c`, and in a
/// second color under [`UnstableRule::DistinctColors`]) and `l' > l` such
/// that replacing the color-`c` entry `l` by `l'` stays a valid tableau.
pub fn has_unstable_triple(t: &PrismTableau, rule: UnstableRule) -> bool {
    find_unstable_triple(t, rule).is_some()
}

/// The first unstable triple found, as `(color, cell, l, l')`.
pub fn find_unstable_triple(
    t: &PrismTableau,
    rule: UnstableRule,
) -> Option<(usize, GridCell, u32, u32)> {
    let mut by_diag: BTreeMap<usize, Vec<(usize, GridCell, u32)>> = BTreeMap::new();
    for (c, cell, v) in t.labelled_cells() {
        by_diag
            .entry(cell.row + cell.col - 1)
            .or_default()
            .push((c, cell, v));
    }
    for entries in by_diag.values() {
        for &(c, cell, l) in entries {
            let shared = entries.iter().any(|&(c2, _, l2)| l2 == l && c2 != c);
            if rule == UnstableRule::DistinctColors && !shared {
                continue;
            }
            let comp = &t.components[c - 1];
            for &(_, _, l2) in entries {
                if l2 > l && comp.accepts(cell.row, cell.col, l2) {
                    return Some((c, cell, l, l2));
                }
            }
        }
    }
    None
}

/// Apply the replacement of an unstable triple.
pub fn resolve_triple(t: &PrismTableau, color: usize, cell: GridCell, value: u32) -> PrismTableau {
    let mut out = t.clone();
    out.components[color - 1].set(cell.row, cell.col, value);
    out
}

/// Odometer over `RSSYT(lambda_1,d_1) x ... x RSSYT(lambda_k,d_k)`.
pub struct AllPrism {
    factors: Vec<Vec<Rssyt>>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for AllPrism {
    type Item = PrismTableau;

    fn next(&mut self) -> Option<PrismTableau> {
        if self.done {
            return None;
        }
        let t = PrismTableau {
            components: self
                .idx
                .iter()
                .zip(&self.factors)
                .map(|(&i, f)| f[i].clone())
                .collect(),
        };
        let mut k = self.idx.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.idx[k] += 1;
            if self.idx[k] < self.factors[k].len() {
                break;
            }
            self.idx[k] = 0;
        }
        Some(t)
    }
}

pub fn enumerate_all_prism(spec: &PrismShapeSpec) -> AllPrism {
    let factors: Vec<Vec<Rssyt>> = spec
        .lambdas
        .iter()
        .zip(&spec.ds)
        .map(|(l, &d)| enumerate_rssyt(l, d).expect("validated spec"))
        .collect();
    let done = factors.iter().any(Vec::is_empty);
    AllPrism {
        idx: vec![0; factors.len()],
        factors,
        done,
    }
}

/// Minimum total degree of `wt(T)` over all prism tableaux of the shape.
pub fn min_prism_degree(spec: &PrismShapeSpec) -> u64 {
    enumerate_all_prism(spec)
        .map(|t| prism_weight(&t).total_degree())
        .min()
        .unwrap_or(0)
}

/// Minimal prism tableaux without unstable triples.
pub fn prism_set_with(spec: &PrismShapeSpec, rule: UnstableRule) -> Vec<PrismTableau> {
    let all: Vec<(PrismTableau, u64)> = enumerate_all_prism(spec)
        .map(|t| {
            let d = prism_weight(&t).total_degree();
            (t, d)
        })
        .collect();
    let min = all.iter().map(|(_, d)| *d).min().unwrap_or(0);
    all.into_iter()
        .filter(|(t, d)| *d == min && !has_unstable_triple(t, rule))
        .map(|(t, _)| t)
        .collect()
}

pub fn prism_set(spec: &PrismShapeSpec) -> Vec<PrismTableau> {
    prism_set_with(spec, UnstableRule::DistinctColors)
}

pub fn asm_polynomial_with(spec: &PrismShapeSpec, rule: UnstableRule) -> Polynomial {
    Polynomial::from_monomials(prism_set_with(spec, rule).iter().map(prism_weight))
}

/// `𝔄_{lambda,d}`: sum of the weights of the prism set.
pub fn asm_polynomial(spec: &PrismShapeSpec) -> Polynomial {
    asm_polynomial_with(spec, UnstableRule::DistinctColors)
}

/// Rectangles `(i - r) x (j - r)` with descent `i`, one per essential cell
/// `(i,j)` with `r = r_A(i,j)`, in row-major order of the cells.
pub fn bigrassmannian_model(a: &Asm) -> PrismShapeSpec {
    let r = a.corner_sum();
    let mut lambdas = Vec::new();
    let mut ds = Vec::new();
    for c in a.essential_set() {
        let rank = r.get(c.row, c.col) as usize;
        lambdas.push(Partition::rectangle(c.row - rank, c.col - rank));
        ds.push(c.row);
    }
    PrismShapeSpec { lambdas, ds }
}

/// The partitions `lambda^{(A,i)}` read from the monotone triangle, one per
/// essential row `i`.
pub fn parabolic_model(a: &Asm) -> PrismShapeSpec {
    let mut rows: Vec<usize> = a.essential_set().into_iter().map(|c| c.row).collect();
    rows.dedup();
    PrismShapeSpec {
        lambdas: rows.iter().map(|&i| a.lambda_row(i)).collect(),
        ds: rows,
    }
}

/// The two prism models of an ASM.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    BiGrassmannian,
    Parabolic,
}

impl Model {
    pub const BOTH: [Model; 2] = [Model::BiGrassmannian, Model::Parabolic];

    pub fn spec(self, a: &Asm) -> PrismShapeSpec {
        match self {
            Model::BiGrassmannian => bigrassmannian_model(a),
            Model::Parabolic => parabolic_model(a),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::BiGrassmannian => "bigr",
            Model::Parabolic => "parabolic",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rssyt(shape: &[u32], d: usize, top_first: &[&[u32]]) -> Rssyt {
        let rows = top_first.iter().rev().map(|r| r.to_vec()).collect();
        Rssyt::new(part(shape), d, rows).unwrap()
    }

    fn diagram_example() -> Asm {
        Asm::parse("0 0 0 1\n0 1 0 0\n1 -1 1 0\n0 1 0 0\n").unwrap()
    }

    fn prism_example() -> (PrismShapeSpec, PrismTableau) {
        let spec = PrismShapeSpec::new(
            vec![part(&[1]), part(&[3, 2]), part(&[2, 1, 1])],
            vec![2, 5, 6],
        )
        .unwrap();
        let t = PrismTableau::new(
            &spec,
            vec![
                rssyt(&[1], 2, &[&[1]]),
                rssyt(&[3, 2], 5, &[&[1, 1], &[3, 3, 2]]),
                rssyt(&[2, 1, 1], 6, &[&[1], &[2], &[6, 3]]),
            ],
        )
        .unwrap();
        (spec, t)
    }

    #[test]
    fn partitions() {
        assert_eq!(Partition::new(vec![1, 2]).unwrap_err(), Error::NotAPartition);
        assert_eq!(part(&[2, 0]), part(&[2]));
        assert!(part(&[2, 1]).contains(&part(&[1, 1])));
        assert!(!part(&[2]).contains(&part(&[1, 1])));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert_eq!(Partition::rectangle(2, 1).to_string(), "(1,1)");
    }

    #[test]
    fn rssyt_enumeration() {
        let single: Vec<String> = enumerate_rssyt(&part(&[1]), 2)
            .unwrap()
            .iter()
            .map(Rssyt::to_string)
            .collect();
        assert_eq!(single, vec!["[1]", "[2]"]);
        assert_eq!(enumerate_rssyt(&part(&[2]), 1).unwrap().len(), 1);
        let col = enumerate_rssyt(&part(&[1, 1]), 2).unwrap();
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].get(1, 1), Some(1));
        assert_eq!(col[0].get(2, 1), Some(2));
        assert!(enumerate_rssyt(&part(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn rssyt_validation() {
        assert!(Rssyt::new(part(&[2]), 2, vec![vec![1, 2]]).is_err());
        assert!(Rssyt::new(part(&[1, 1]), 2, vec![vec![1], vec![1]]).is_err());
        assert!(Rssyt::new(part(&[1]), 2, vec![vec![3]]).is_err());
    }

    #[test]
    fn weights() {
        let (_, t) = prism_example();
        assert_eq!(prism_weight(&t).to_string(), "x1^3*x2^2*x3^3*x6");
        let empty = PrismTableau::new(&PrismShapeSpec::default(), vec![]).unwrap();
        assert_eq!(prism_weight(&empty), Monomial::one());
    }

    #[test]
    fn weight_ignores_component_order() {
        let (spec, t) = prism_example();
        let mut comps = t.components().to_vec();
        comps.reverse();
        let rev_spec = PrismShapeSpec::new(
            spec.lambdas.iter().rev().cloned().collect(),
            spec.ds.iter().rev().copied().collect(),
        )
        .unwrap();
        let rev = PrismTableau::new(&rev_spec, comps).unwrap();
        assert_eq!(prism_weight(&rev), prism_weight(&t));
    }

    #[test]
    fn bigrassmannian_model_example() {
        let a = diagram_example();
        let spec = bigrassmannian_model(&a);
        assert_eq!(spec.lambdas, vec![part(&[3]), part(&[1, 1]), part(&[1, 1])]);
        assert_eq!(spec.ds, vec![1, 2, 3]);
        assert_eq!(spec.asm(), a);
        let all: Vec<PrismTableau> = enumerate_all_prism(&spec).collect();
        assert_eq!(all.len(), 3);
        let degs: Vec<u64> = all.iter().map(|t| prism_weight(t).total_degree()).collect();
        assert!(degs.iter().all(|&d| d == 5));
        let unstable: Vec<bool> = all
            .iter()
            .map(|t| has_unstable_triple(t, UnstableRule::DistinctColors))
            .collect();
        assert_eq!(unstable.iter().filter(|&&u| u).count(), 1);
        assert_eq!(
            asm_polynomial(&spec).to_string(),
            "x1^3*x2^2 + x1^3*x2*x3"
        );
        assert!(bigrassmannian_model(&Asm::identity(3)).is_empty());
    }

    #[test]
    fn parabolic_model_example() {
        let a = diagram_example();
        let spec = parabolic_model(&a);
        assert_eq!(spec.lambdas, vec![part(&[3]), part(&[2, 1]), part(&[1, 1])]);
        assert_eq!(spec.ds, vec![1, 2, 3]);
        assert_eq!(spec.asm(), a);
        let all: Vec<PrismTableau> = enumerate_all_prism(&spec).collect();
        assert_eq!(all.len(), 6);
        let min = min_prism_degree(&spec);
        let minimal = all
            .iter()
            .filter(|t| prism_weight(t).total_degree() == min)
            .count();
        assert_eq!(minimal, 4);
        assert_eq!(prism_set(&spec).len(), 2);
        assert_eq!(
            asm_polynomial(&spec).to_string(),
            "x1^3*x2^2 + x1^3*x2*x3"
        );
        assert!(parabolic_model(&Asm::identity(3)).is_empty());
    }

    #[test]
    fn noneqi_models_coincide() {
        let a = Asm::parse("0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n").unwrap();
        let expected = PrismShapeSpec::new(vec![part(&[2]), part(&[2])], vec![1, 2]).unwrap();
        assert_eq!(bigrassmannian_model(&a), expected);
        assert_eq!(parabolic_model(&a), expected);
        assert_eq!(asm_polynomial(&expected).to_string(), "x1^3");
    }

    #[test]
    fn single_shape_is_schur() {
        let spec = PrismShapeSpec::new(vec![part(&[1])], vec![2]).unwrap();
        assert_eq!(asm_polynomial(&spec).to_string(), "x1 + x2");
        let spec = PrismShapeSpec::new(vec![part(&[2, 1])], vec![3]).unwrap();
        let p = asm_polynomial(&spec);
        assert_eq!(p.eval_ones(), 8.into());
    }

    #[test]
    fn all_prism_of_empty_spec() {
        let all: Vec<PrismTableau> = enumerate_all_prism(&PrismShapeSpec::default()).collect();
        assert_eq!(all.len(), 1);
        assert!(all[0].components().is_empty());
    }

    #[test]
    fn distinct_labels_are_stable() {
        let spec = PrismShapeSpec::new(vec![part(&[2])], vec![2]).unwrap();
        for t in enumerate_all_prism(&spec) {
            assert!(!has_unstable_triple(&t, UnstableRule::DistinctColors));
        }
    }
}
