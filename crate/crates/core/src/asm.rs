//! Alternating sign matrices, partial ASMs, corner sums and the lattice
//! order, Rothe diagrams, essential sets and monotone triangles.

use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Line, Result};
use crate::perm::{bigrassmannian_encode, Perm};
use crate::prism::Partition;

/// A cell of the grid in matrix coordinates, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridCell {
    pub row: usize,
    pub col: usize,
}

impl GridCell {
    pub const fn new(row: usize, col: usize) -> Self {
        GridCell { row, col }
    }
}

impl fmt::Display for GridCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(usize, usize)> for GridCell {
    fn from((row, col): (usize, usize)) -> Self {
        GridCell { row, col }
    }
}

/// Parse the whitespace separated integer matrix format. Blank lines are
/// skipped; the matrix must be square.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut rows: Vec<(usize, Vec<i64>)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut row = Vec::new();
        let mut col = 0;
        let bytes = line.as_bytes();
        while col < bytes.len() {
            if bytes[col].is_ascii_whitespace() {
                col += 1;
                continue;
            }
            let start = col;
            while col < bytes.len() && !bytes[col].is_ascii_whitespace() {
                col += 1;
            }
            let token = &line[start..col];
            let value: i64 = token.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                col: start + 1,
                msg: format!("expected an integer, found {token:?}"),
            })?;
            row.push(value);
        }
        if !row.is_empty() {
            rows.push((lineno + 1, row));
        }
    }
    let n = rows.len();
    if n == 0 {
        return Err(Error::Parse {
            line: 1,
            col: 1,
            msg: "no matrix rows".into(),
        });
    }
    for (lineno, row) in &rows {
        if row.len() != n {
            return Err(Error::Parse {
                line: *lineno,
                col: 1,
                msg: format!("row has {} entries, expected {n}", row.len()),
            });
        }
    }
    Ok(rows.into_iter().map(|(_, r)| r).collect())
}

fn check_square(m: &[Vec<i64>]) -> Result<usize> {
    let n = m.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i + 1,
                len: row.len(),
                expected: n,
            });
        }
        for (j, &v) in row.iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::EntryOutOfRange {
                    row: i + 1,
                    col: j + 1,
                    value: v,
                });
            }
        }
    }
    Ok(n)
}

/// Checks one row or column: alternation, then the sum (and for partial
/// matrices, the leading sign).
fn check_line(values: impl Iterator<Item = i8>, line: Line, partial: bool) -> Result<()> {
    let mut last = 0i8;
    let mut sum = 0i64;
    for v in values.filter(|&v| v != 0) {
        if last == 0 && v == -1 && partial {
            return Err(Error::FirstNonzero(line));
        }
        if last == v {
            return Err(Error::SignAlternation(line));
        }
        last = v;
        sum += i64::from(v);
    }
    let ok = if partial {
        sum == 0 || sum == 1
    } else {
        sum == 1
    };
    if !ok {
        return Err(Error::LineSum { line, sum });
    }
    Ok(())
}

fn check_lines(n: usize, entries: &[i8], partial: bool) -> Result<()> {
    for i in 0..n {
        check_line(
            entries[i * n..(i + 1) * n].iter().copied(),
            Line::Row(i + 1),
            partial,
        )?;
    }
    for j in 0..n {
        check_line(
            (0..n).map(|i| entries[i * n + j]),
            Line::Column(j + 1),
            partial,
        )?;
    }
    Ok(())
}

fn to_entries(m: &[Vec<i64>]) -> Vec<i8> {
    m.iter().flatten().map(|&v| v as i8).collect()
}

fn prefix_sums(n: usize, entries: &[i8]) -> Vec<u32> {
    let mut r = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let up = if i > 0 { r[(i - 1) * n + j] } else { 0 };
            let left = if j > 0 { r[i * n + j - 1] } else { 0 };
            let diag = if i > 0 && j > 0 { r[(i - 1) * n + j - 1] } else { 0 };
            r[i * n + j] = i64::from(entries[i * n + j]) + up + left - diag;
        }
    }
    r.into_iter().map(|v| v as u32).collect()
}

fn format_matrix(f: &mut fmt::Formatter<'_>, n: usize, entries: &[i8]) -> fmt::Result {
    for i in 0..n {
        let row: Vec<String> = entries[i * n..(i + 1) * n]
            .iter()
            .map(|v| v.to_string())
            .collect();
        writeln!(f, "{}", row.join(" "))?;
    }
    Ok(())
}

/// An `n x n` alternating sign matrix.
///
/// Equality and hashing are taken up to the inclusion `A -> [[A,0],[0,1]]`,
/// so `I_2 == I_3`.
#[derive(Clone, Debug)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn validate(m: &[Vec<i64>]) -> Result<Asm> {
        let n = check_square(m)?;
        let entries = to_entries(m);
        check_lines(n, &entries, false)?;
        Ok(Asm { n, entries })
    }

    pub fn parse(text: &str) -> Result<Asm> {
        Asm::validate(&parse_matrix(text)?)
    }

    /// Build from row-major entries without validation; callers guarantee
    /// the ASM axioms.
    pub(crate) fn from_raw(n: usize, entries: Vec<i8>) -> Asm {
        debug_assert_eq!(entries.len(), n * n);
        Asm { n, entries }
    }

    pub fn identity(n: usize) -> Asm {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Asm { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `a_{ij}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    pub fn is_permutation(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }

    /// The permutation `w` with `a_{i,w(i)} = 1`, if this is a permutation
    /// matrix.
    pub fn to_perm(&self) -> Option<Perm> {
        if !self.is_permutation() {
            return None;
        }
        let one_line = (1..=self.n)
            .map(|i| (1..=self.n).find(|&j| self.get(i, j) == 1).unwrap())
            .collect();
        Some(Perm::from_one_line_unchecked(one_line))
    }

    pub fn corner_sum(&self) -> CornerSum {
        CornerSum {
            n: self.n,
            r: prefix_sums(self.n, &self.entries),
        }
    }

    pub fn from_corner_sum(r: &CornerSum) -> Result<Asm> {
        r.check_asm()?;
        Ok(Asm {
            n: r.n,
            entries: r.differences(),
        })
    }

    /// Smallest `m` such that this matrix is the inclusion of an `m x m` ASM.
    pub fn reduced_size(&self) -> usize {
        let mut m = self.n;
        while m > 1 && self.get(m, m) == 1 {
            m -= 1;
        }
        m
    }

    /// The canonical representative of the inclusion class.
    pub fn reduced(&self) -> Asm {
        let m = self.reduced_size();
        self.restrict(m)
    }

    fn restrict(&self, m: usize) -> Asm {
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            entries.extend_from_slice(&self.entries[i * self.n..i * self.n + m]);
        }
        Asm { n: m, entries }
    }

    /// Block inclusion into size `n + 1`.
    pub fn embed(&self) -> Asm {
        self.embed_to(self.n + 1)
    }

    /// Repeated inclusion into size `size >= n`; smaller sizes are allowed
    /// when the matrix is equivalent to one of that size.
    pub fn embed_to(&self, size: usize) -> Asm {
        if size < self.n {
            assert!(
                size >= self.reduced_size(),
                "cannot shrink an ASM below its reduced size"
            );
            return self.restrict(size);
        }
        let mut entries = vec![0; size * size];
        for i in 0..self.n {
            entries[i * size..i * size + self.n]
                .copy_from_slice(&self.entries[i * self.n..(i + 1) * self.n]);
        }
        for i in self.n..size {
            entries[i * size + i] = 1;
        }
        Asm {
            n: size,
            entries,
        }
    }

    /// `self <= other` in the ASM order: `r_self >= r_other` entrywise.
    /// Matrices of different size are compared after inclusion.
    pub fn leq(&self, other: &Asm) -> bool {
        let size = self.n.max(other.n);
        let a = self.embed_to(size).corner_sum();
        let b = other.embed_to(size).corner_sum();
        a.r.iter().zip(&b.r).all(|(x, y)| x >= y)
    }

    /// Least upper bound: entrywise minimum of corner sums.
    pub fn join(&self, other: &Asm) -> Asm {
        let size = self.n.max(other.n);
        let a = self.embed_to(size).corner_sum();
        let b = other.embed_to(size).corner_sum();
        let r = CornerSum {
            n: size,
            r: a.r.iter().zip(&b.r).map(|(x, y)| *x.min(y)).collect(),
        };
        Asm::from_corner_sum(&r).expect("ASM corner sums are closed under min")
    }

    /// Greatest lower bound: entrywise maximum of corner sums.
    pub fn meet(&self, other: &Asm) -> Asm {
        let size = self.n.max(other.n);
        let a = self.embed_to(size).corner_sum();
        let b = other.embed_to(size).corner_sum();
        let r = CornerSum {
            n: size,
            r: a.r.iter().zip(&b.r).map(|(x, y)| *x.max(y)).collect(),
        };
        Asm::from_corner_sum(&r).expect("ASM corner sums are closed under max")
    }

    /// Join of a family in a fixed ambient size; the empty join is the
    /// identity.
    pub fn join_all<'a, I: IntoIterator<Item = &'a Asm>>(n: usize, items: I) -> Asm {
        items
            .into_iter()
            .fold(Asm::identity(n), |acc, a| acc.join(a))
    }

    /// Rothe diagram `D(A)`: cells where both the partial column sum from
    /// above and the partial row sum from the left vanish.
    pub fn rothe_diagram(&self) -> BTreeSet<GridCell> {
        let n = self.n;
        let mut col_sums = vec![0i32; n];
        let mut out = BTreeSet::new();
        for i in 1..=n {
            let mut row_sum = 0i32;
            for j in 1..=n {
                let v = i32::from(self.get(i, j));
                col_sums[j - 1] += v;
                row_sum += v;
                if (1 - col_sums[j - 1]) * (1 - row_sum) == 1 {
                    out.insert(GridCell::new(i, j));
                }
            }
        }
        out
    }

    pub fn inversions(&self) -> BTreeSet<GridCell> {
        self.rothe_diagram()
    }

    /// Southeast corners of the connected components of `D(A)`.
    pub fn essential_set(&self) -> BTreeSet<GridCell> {
        let d = self.rothe_diagram();
        d.iter()
            .copied()
            .filter(|c| {
                !d.contains(&GridCell::new(c.row + 1, c.col))
                    && !d.contains(&GridCell::new(c.row, c.col + 1))
            })
            .collect()
    }

    /// The essential set read off the corner sum: cells with
    /// `r(i,j) = r(i-1,j) = r(i,j-1)` and `r(i,j)+1 = r(i+1,j) = r(i,j+1)`.
    pub fn essential_set_by_rank(&self) -> BTreeSet<GridCell> {
        let r = self.corner_sum();
        let n = self.n;
        let mut out = BTreeSet::new();
        for i in 1..n {
            for j in 1..n {
                let v = r.get(i, j);
                if v == r.get(i - 1, j)
                    && v == r.get(i, j - 1)
                    && v + 1 == r.get(i + 1, j)
                    && v + 1 == r.get(i, j + 1)
                {
                    out.insert(GridCell::new(i, j));
                }
            }
        }
        out
    }

    pub fn monotone_triangle(&self) -> MonotoneTriangle {
        let n = self.n;
        let mut col_sums = vec![0i8; n];
        let mut rows = Vec::with_capacity(n);
        for i in 1..=n {
            for j in 1..=n {
                col_sums[j - 1] += self.get(i, j);
            }
            rows.push(
                (1..=n)
                    .filter(|&j| col_sums[j - 1] == 1)
                    .collect::<Vec<_>>(),
            );
        }
        MonotoneTriangle { rows }
    }

    /// `lambda^{(A,l)}`: the partition read from row `l` of the monotone
    /// triangle, `(m(l,l)-l, m(l,l-1)-(l-1), ..., m(l,1)-1)`.
    pub fn lambda_row(&self, l: usize) -> Partition {
        assert!(l >= 1 && l <= self.n, "row index out of range");
        let m = self.monotone_triangle();
        let row = &m.rows[l - 1];
        Partition::new(
            (1..=l)
                .rev()
                .map(|j| (row[j - 1] - j) as u32)
                .collect(),
        )
        .expect("monotone triangle rows give partitions")
    }

    /// Every ASM of size `n`, in lexicographic order of flattened monotone
    /// triangles.
    pub fn enumerate(n: usize) -> AsmIter {
        AsmIter::new(n)
    }

    pub fn count(n: usize) -> usize {
        Asm::enumerate(n).count()
    }
}

impl PartialEq for Asm {
    fn eq(&self, other: &Self) -> bool {
        let (m1, m2) = (self.reduced_size(), other.reduced_size());
        m1 == m2 && (1..=m1).all(|i| (1..=m1).all(|j| self.get(i, j) == other.get(i, j)))
    }
}

impl Eq for Asm {}

impl Hash for Asm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let m = self.reduced_size();
        m.hash(state);
        for i in 1..=m {
            for j in 1..=m {
                self.get(i, j).hash(state);
            }
        }
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_matrix(f, self.n, &self.entries)
    }
}

/// Lazy depth-first enumeration of monotone triangles.
pub struct AsmIter {
    n: usize,
    // candidates for each row chosen so far, with the index of the current pick
    stack: Vec<(Vec<Vec<usize>>, usize)>,
    started: bool,
}

impl AsmIter {
    fn new(n: usize) -> Self {
        AsmIter {
            n,
            stack: Vec::new(),
            started: false,
        }
    }

    /// Strictly increasing rows of length `prev.len() + 1` interleaving
    /// `prev`, in lexicographic order.
    fn next_rows(n: usize, prev: &[usize]) -> Vec<Vec<usize>> {
        let len = prev.len() + 1;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(len);
        fn rec(n: usize, prev: &[usize], len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let k = cur.len();
            if k == len {
                out.push(cur.clone());
                return;
            }
            let lo = [cur.last().map(|&v| v + 1), k.checked_sub(1).map(|p| prev[p])]
                .into_iter()
                .flatten()
                .max()
                .unwrap_or(1)
                .max(1);
            let hi = if k < prev.len() { prev[k] } else { n };
            for v in lo..=hi {
                cur.push(v);
                rec(n, prev, len, cur, out);
                cur.pop();
            }
        }
        rec(n, prev, len, &mut cur, &mut out);
        out
    }

    fn current_row(&self, level: usize) -> &[usize] {
        let (cands, idx) = &self.stack[level];
        &cands[*idx]
    }

    fn triangle(&self) -> MonotoneTriangle {
        MonotoneTriangle {
            rows: (0..self.stack.len())
                .map(|l| self.current_row(l).to_vec())
                .collect(),
        }
    }

    /// Extend the stack down to a full triangle, backtracking on dead ends.
    /// Returns false when exhausted.
    fn descend(&mut self) -> bool {
        loop {
            if self.stack.is_empty() {
                return false;
            }
            let depth = self.stack.len();
            if depth == self.n {
                let full: Vec<usize> = (1..=self.n).collect();
                if self.current_row(depth - 1) == full.as_slice() {
                    return true;
                }
                if !self.advance() {
                    return false;
                }
                continue;
            }
            let next = Self::next_rows(self.n, self.current_row(depth - 1));
            if next.is_empty() {
                if !self.advance() {
                    return false;
                }
            } else {
                self.stack.push((next, 0));
            }
        }
    }

    /// Move to the next sibling at the deepest level, popping exhausted
    /// levels.
    fn advance(&mut self) -> bool {
        while let Some((cands, idx)) = self.stack.last_mut() {
            if *idx + 1 < cands.len() {
                *idx += 1;
                return true;
            }
            self.stack.pop();
        }
        false
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.n == 0 {
            return None;
        }
        if !self.started {
            self.started = true;
            self.stack.push((Self::next_rows(self.n, &[]), 0));
        } else if !self.advance() {
            return None;
        }
        if self.descend() {
            Some(self.triangle().to_asm())
        } else {
            None
        }
    }
}

/// The corner sum matrix `r(i,j) = sum_{k<=i, l<=j} a_{kl}`, with the
/// implicit convention `r(0,j) = r(i,0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornerSum {
    n: usize,
    r: Vec<u32>,
}

impl CornerSum {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<CornerSum> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    expected: n,
                });
            }
        }
        Ok(CornerSum {
            n,
            r: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r(i,j)` for `0 <= i,j <= n`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            0
        } else {
            self.r[(i - 1) * self.n + (j - 1)]
        }
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.r.chunks(self.n).map(<[u32]>::to_vec).collect()
    }

    /// Consecutive differences along rows and columns lie in `{0,1}`.
    pub fn check_steps(&self) -> Result<()> {
        for i in 1..=self.n {
            for j in 1..=self.n {
                let v = self.get(i, j);
                let up = self.get(i - 1, j);
                let left = self.get(i, j - 1);
                if v < up || v - up > 1 || v < left || v - left > 1 {
                    return Err(Error::CornerSumStep { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// Both corner-sum axioms of an honest ASM.
    pub fn check_asm(&self) -> Result<()> {
        for i in 1..=self.n {
            if self.get(i, self.n) != i as u32 || self.get(self.n, i) != i as u32 {
                return Err(Error::CornerSumBoundary(i));
            }
        }
        self.check_steps()
    }

    fn differences(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 1..=self.n {
            for j in 1..=self.n {
                let a = i64::from(self.get(i, j)) - i64::from(self.get(i, j - 1))
                    - i64::from(self.get(i - 1, j))
                    + i64::from(self.get(i - 1, j - 1));
                out.push(a as i8);
            }
        }
        out
    }

    pub fn entrywise_min(&self, other: &CornerSum) -> CornerSum {
        assert_eq!(self.n, other.n);
        CornerSum {
            n: self.n,
            r: self.r.iter().zip(&other.r).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn entrywise_max(&self, other: &CornerSum) -> CornerSum {
        assert_eq!(self.n, other.n);
        CornerSum {
            n: self.n,
            r: self.r.iter().zip(&other.r).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &CornerSum) -> bool {
        self.n == other.n && self.r.iter().zip(&other.r).all(|(a, b)| a >= b)
    }

    /// Restriction to the northwest `m x m` block.
    pub fn northwest(&self, m: usize) -> CornerSum {
        assert!(m <= self.n);
        CornerSum {
            n: m,
            r: (1..=m)
                .flat_map(|i| (1..=m).map(move |j| (i, j)))
                .map(|(i, j)| self.get(i, j))
                .collect(),
        }
    }
}

impl fmt::Display for CornerSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let row: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Row `i` lists, increasingly, the columns `j` where the partial column
/// sum `sum_{k<=i} a_{kj}` equals 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneTriangle {
    pub rows: Vec<Vec<usize>>,
}

impl MonotoneTriangle {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.n();
        let mut entries = vec![0i8; n * n];
        let mut prev = vec![0i8; n];
        for (i, row) in self.rows.iter().enumerate() {
            let mut cur = vec![0i8; n];
            for &j in row {
                cur[j - 1] = 1;
            }
            for j in 0..n {
                entries[i * n + j] = cur[j] - prev[j];
            }
            prev = cur;
        }
        Asm::from_raw(n, entries)
    }

    /// Corner sums via the ascent rule: `r(i,a)` counts entries of row `i`
    /// that are at most `a`.
    pub fn to_corner_sum(&self) -> CornerSum {
        let n = self.n();
        let mut r = Vec::with_capacity(n * n);
        for row in &self.rows {
            for a in 1..=n {
                r.push(row.iter().filter(|&&v| v <= a).count() as u32);
            }
        }
        CornerSum { n, r }
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let row: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// A partial ASM: alternating rows and columns summing to 0 or 1, each
/// starting (if nonzero) with a 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialAsm {
    n: usize,
    entries: Vec<i8>,
}

impl PartialAsm {
    pub fn validate(m: &[Vec<i64>]) -> Result<PartialAsm> {
        let n = check_square(m)?;
        let entries = to_entries(m);
        check_lines(n, &entries, true)?;
        Ok(PartialAsm { n, entries })
    }

    pub fn parse(text: &str) -> Result<PartialAsm> {
        PartialAsm::validate(&parse_matrix(text)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    pub fn corner_sum(&self) -> CornerSum {
        CornerSum {
            n: self.n,
            r: prefix_sums(self.n, &self.entries),
        }
    }

    /// Rebuild from a corner sum satisfying the step axiom.
    pub fn from_corner_sum(r: &CornerSum) -> Result<PartialAsm> {
        r.check_steps()?;
        Ok(PartialAsm {
            n: r.n,
            entries: r.differences(),
        })
    }

    /// The honest ASM, when every row and column already sums to 1.
    pub fn to_asm(&self) -> Option<Asm> {
        let m: Vec<Vec<i64>> = self.rows();
        Asm::validate(&m).ok()
    }

    /// Order by corner sums (`self <= other` iff `r_self >= r_other`).
    pub fn leq(&self, other: &PartialAsm) -> bool {
        self.corner_sum().dominates(&other.corner_sum())
    }

    /// Append a column for each zero-sum row (top to bottom), then a row for
    /// each zero-sum original column (left to right).
    pub fn canonical_completion(&self) -> Asm {
        let n = self.n;
        let zero_rows: Vec<usize> = (1..=n)
            .filter(|&i| (1..=n).map(|j| i64::from(self.get(i, j))).sum::<i64>() == 0)
            .collect();
        let zero_cols: Vec<usize> = (1..=n)
            .filter(|&j| (1..=n).map(|i| i64::from(self.get(i, j))).sum::<i64>() == 0)
            .collect();
        debug_assert_eq!(zero_rows.len(), zero_cols.len());
        let size = n + zero_rows.len();
        let mut entries = vec![0i8; size * size];
        for i in 1..=n {
            for j in 1..=n {
                entries[(i - 1) * size + (j - 1)] = self.get(i, j);
            }
        }
        for (k, &i) in zero_rows.iter().enumerate() {
            entries[(i - 1) * size + n + k] = 1;
        }
        for (k, &j) in zero_cols.iter().enumerate() {
            entries[(n + k) * size + (j - 1)] = 1;
        }
        Asm::from_raw(size, entries)
    }
}

impl From<&Asm> for PartialAsm {
    fn from(a: &Asm) -> Self {
        PartialAsm {
            n: a.n,
            entries: a.entries.clone(),
        }
    }
}

impl fmt::Display for PartialAsm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_matrix(f, self.n, &self.entries)
    }
}

/// Corner sum of the partial biGrassmannian `[i,j,r]_b` in `n x n`: the
/// northwest block of the biGrassmannian permutation in `S_{2n}`.
pub fn partial_bigrassmannian_corner_sum(i: usize, j: usize, r: usize, n: usize) -> CornerSum {
    let w = bigrassmannian_encode(i, j, r, 2 * n).expect("triple fits in size 2n");
    w.to_asm().embed_to(2 * n).corner_sum().northwest(n)
}

/// The partial ASM `A_r`: the join of the partial biGrassmannians
/// `[i,j,r_ij]_b` over all non-vacuous conditions. `None` marks an
/// unbounded entry; `r_ij >= min(i,j)` is vacuous.
pub fn asm_from_rank_conditions(r: &[Vec<Option<u32>>]) -> Result<PartialAsm> {
    let n = r.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut acc: Option<CornerSum> = None;
    for (i, row) in r.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i + 1,
                len: row.len(),
                expected: n,
            });
        }
        for (j, bound) in row.iter().enumerate() {
            let (i1, j1) = (i + 1, j + 1);
            let Some(bound) = *bound else { continue };
            if bound as usize >= i1.min(j1) {
                continue;
            }
            let cs = partial_bigrassmannian_corner_sum(i1, j1, bound as usize, n);
            acc = Some(match acc {
                None => cs,
                Some(a) => a.entrywise_min(&cs),
            });
        }
    }
    match acc {
        None => Ok(PartialAsm::from(&Asm::identity(n))),
        Some(cs) => PartialAsm::from_corner_sum(&cs),
    }
}
