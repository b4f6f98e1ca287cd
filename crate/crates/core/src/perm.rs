//! Permutations and words in simple transpositions: lengths, Demazure
//! products, Bruhat order, Grassmannian and biGrassmannian codecs, and the
//! permutations sitting above an ASM.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::asm::Asm;
use crate::error::{Error, Result};
use crate::prism::Partition;

/// A permutation in one-line notation. Equality, hashing and ordering
/// ignore trailing fixed points, so `21 == 213`.
#[derive(Clone, Debug)]
pub struct Perm {
    one_line: Vec<usize>,
}

impl Perm {
    pub fn from_one_line(one_line: Vec<usize>) -> Result<Perm> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Perm { one_line })
    }

    pub(crate) fn from_one_line_unchecked(one_line: Vec<usize>) -> Perm {
        Perm { one_line }
    }

    pub fn identity(n: usize) -> Perm {
        Perm {
            one_line: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// `w(i)`, 1-based; fixed beyond the stored size.
    pub fn apply(&self, i: usize) -> usize {
        if i > self.n() {
            i
        } else {
            self.one_line[i - 1]
        }
    }

    fn reduced_len(&self) -> usize {
        let mut m = self.n();
        while m > 0 && self.one_line[m - 1] == m {
            m -= 1;
        }
        m
    }

    pub fn reduced(&self) -> Perm {
        Perm {
            one_line: self.one_line[..self.reduced_len()].to_vec(),
        }
    }

    /// The same permutation in `S_size`; `size` must be at least the
    /// largest non-fixed point.
    pub fn embed_to(&self, size: usize) -> Perm {
        assert!(size >= self.reduced_len(), "permutation does not fit");
        Perm {
            one_line: (1..=size).map(|i| self.apply(i)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.reduced_len() == 0
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.one_line;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Perm { one_line: inv }
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.one_line[i - 1] > self.one_line[i])
            .collect()
    }

    /// Lehmer code: `c_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.one_line;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
            .collect()
    }

    /// Right multiplication by `s_i`: swap positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Perm {
        let size = self.n().max(i + 1);
        let mut w = self.embed_to(size);
        w.one_line.swap(i - 1, i);
        w
    }

    pub fn to_asm(&self) -> Asm {
        let n = self.n().max(1);
        let mut entries = vec![0i8; n * n];
        for i in 1..=n {
            entries[(i - 1) * n + self.apply(i) - 1] = 1;
        }
        Asm::from_raw(n, entries)
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Perm {
            one_line: cur.clone(),
        }];
        while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Perm {
                one_line: cur.clone(),
            });
        }
        out
    }
}

impl PartialEq for Perm {
    fn eq(&self, other: &Self) -> bool {
        let m = self.reduced_len();
        m == other.reduced_len() && self.one_line[..m] == other.one_line[..m]
    }
}

impl Eq for Perm {}

impl Hash for Perm {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.one_line[..self.reduced_len()].hash(state);
    }
}

impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.one_line[..self.reduced_len()].cmp(&other.one_line[..other.reduced_len()])
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Perm> {
        let mut values = Vec::new();
        for (idx, token) in s.split_whitespace().enumerate() {
            let v = token.parse().map_err(|_| Error::Parse {
                line: 1,
                col: idx + 1,
                msg: format!("expected a positive integer, found {token:?}"),
            })?;
            values.push(v);
        }
        Perm::from_one_line(values)
    }
}

/// Bruhat order via corner sums of permutation matrices.
pub fn bruhat_leq(v: &Perm, w: &Perm) -> bool {
    v.to_asm().leq(&w.to_asm())
}

/// An ordered list of simple transpositions; `3` stands for `s_3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Word> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0) {
            return Err(Error::InvalidLetter(bad));
        }
        Ok(Word { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn ambient(&self) -> usize {
        self.letters.iter().max().map_or(1, |&m| m + 1)
    }

    /// The ordinary product `s_{q1} s_{q2} ...`.
    pub fn product(&self) -> Perm {
        let mut w = Perm::identity(self.ambient());
        for &i in &self.letters {
            w.one_line.swap(i - 1, i);
        }
        w
    }

    /// The Demazure product: multiply by `s_i` only when that lengthens.
    pub fn demazure_product(&self) -> Perm {
        let mut w = Perm::identity(self.ambient());
        for &i in &self.letters {
            if w.one_line[i - 1] < w.one_line[i] {
                w.one_line.swap(i - 1, i);
            }
        }
        w
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let mut letters = Vec::new();
        for (idx, token) in s.split(',').enumerate() {
            let v = token.trim().parse().map_err(|_| Error::Parse {
                line: 1,
                col: idx + 1,
                msg: format!("expected a letter index, found {token:?}"),
            })?;
            letters.push(v);
        }
        Word::new(letters)
    }
}

pub fn demazure_product(q: &Word) -> Perm {
    q.demazure_product()
}

pub fn word_product(q: &Word) -> Perm {
    q.product()
}

pub fn is_reduced(q: &Word) -> bool {
    q.is_reduced()
}

/// The Grassmannian permutation `[lambda, d]_g` in `S_n`: its values at
/// positions `d, d-1, ..., 1` are `lambda_i + d - i + 1`, and the remaining
/// values fill positions `d+1..n` increasingly.
pub fn grassmannian_encode(lambda: &Partition, d: usize, n: usize) -> Result<Perm> {
    if lambda.is_empty() {
        return Ok(Perm::identity(n));
    }
    let width = n.saturating_sub(d);
    if lambda.len() > d || lambda.parts()[0] as usize > width {
        return Err(Error::PartitionDoesNotFit {
            partition: lambda.to_string(),
            rows: d,
            cols: width,
        });
    }
    let mut w = vec![0; n];
    let mut used = vec![false; n + 1];
    for i in 1..=d {
        let v = lambda.part(i) as usize + d - i + 1;
        w[d - i] = v;
        used[v] = true;
    }
    let mut rest = (1..=n).filter(|&v| !used[v]);
    for slot in w.iter_mut().skip(d) {
        *slot = rest.next().unwrap();
    }
    Ok(Perm { one_line: w })
}

/// Inverse of [`grassmannian_encode`]: `(lambda, d)` for a permutation
/// with at most one descent; the identity decodes to the empty partition
/// with `d = 1`.
pub fn grassmannian_decode(w: &Perm) -> Option<(Partition, usize)> {
    let des = w.descents();
    match des.as_slice() {
        [] => Some((Partition::empty(), 1)),
        [d] => {
            let d = *d;
            let parts = (1..=d)
                .map(|i| (w.apply(d - i + 1) - (d - i + 1)) as u32)
                .collect();
            Some((Partition::new(parts).ok()?, d))
        }
        _ => None,
    }
}

/// The biGrassmannian `[i,j,r]_b` in `S_n`. With `r = min(i,j)` this is
/// the identity.
pub fn bigrassmannian_encode(i: usize, j: usize, r: usize, n: usize) -> Result<Perm> {
    let bad = || Error::InvalidBiGrassmannian { i, j, r, n };
    if i == 0 || j == 0 || r > i.min(j) {
        return Err(bad());
    }
    if r == i.min(j) {
        return Ok(Perm::identity(n));
    }
    if i + j - r > n {
        return Err(bad());
    }
    let w = (1..=n)
        .map(|k| {
            if k <= r {
                k
            } else if k <= i {
                k + (j - r)
            } else if k <= i + j - r {
                k - (i - r)
            } else {
                k
            }
        })
        .collect();
    Ok(Perm { one_line: w })
}

/// Whether `w` is biGrassmannian (at most one descent, as is its inverse).
pub fn is_bigrassmannian(w: &Perm) -> bool {
    w.descents().len() <= 1 && w.inverse().descents().len() <= 1
}

/// `A_{lambda,d}`: the join of the Grassmannian permutations
/// `[lambda_i, d_i]_g`, in the smallest size where every shape fits.
pub fn asm_from_shape_tuple(lambdas: &[Partition], ds: &[usize]) -> Result<Asm> {
    if lambdas.len() != ds.len() {
        return Err(Error::ShapeLengthMismatch(lambdas.len(), ds.len()));
    }
    for (lambda, &d) in lambdas.iter().zip(ds) {
        if d == 0 || lambda.len() > d {
            return Err(Error::DescentTooSmall {
                d,
                len: lambda.len(),
            });
        }
    }
    let n = lambdas
        .iter()
        .zip(ds)
        .filter(|(l, _)| !l.is_empty())
        .map(|(l, &d)| d + l.parts()[0] as usize)
        .max()
        .unwrap_or(1);
    let mut acc = Asm::identity(n);
    for (lambda, &d) in lambdas.iter().zip(ds) {
        let u = grassmannian_encode(lambda, d, n)?;
        acc = acc.join(&u.to_asm());
    }
    Ok(acc)
}

/// `biGr(A)`: the biGrassmannians `[i,j,r_A(i,j)]_b` over the essential
/// set of `A`.
pub fn bigr_of(a: &Asm) -> BTreeSet<Perm> {
    let r = a.corner_sum();
    let n = a.n();
    a.essential_set()
        .into_iter()
        .map(|c| {
            let rank = r.get(c.row, c.col) as usize;
            bigrassmannian_encode(c.row, c.col, rank, n)
                .or_else(|_| bigrassmannian_encode(c.row, c.col, rank, 2 * n))
                .expect("essential cells give valid triples")
        })
        .collect()
}

/// `Perm(A)`: the Bruhat-minimal permutations of `S_n` lying above `A`.
pub fn perm_set(a: &Asm) -> BTreeSet<Perm> {
    let above: Vec<Perm> = Perm::all(a.n())
        .into_iter()
        .filter(|w| a.leq(&w.to_asm()))
        .collect();
    above
        .iter()
        .filter(|w| !above.iter().any(|u| u != *w && bruhat_leq(u, w)))
        .cloned()
        .collect()
}

/// `MinPerm(A)`: the elements of `Perm(A)` of minimum length.
pub fn min_perm_set(a: &Asm) -> BTreeSet<Perm> {
    let perms = perm_set(a);
    let best = perms.iter().map(Perm::length).min().unwrap_or(0);
    perms.into_iter().filter(|w| w.length() == best).collect()
}

pub fn deg(a: &Asm) -> usize {
    perm_set(a).iter().map(Perm::length).min().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Perm {
        Perm::from_one_line(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
    }

    fn word(letters: &[usize]) -> Word {
        Word::new(letters.to_vec()).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn noneqi() -> Asm {
        p("3124").to_asm().join(&p("1423").to_asm())
    }

    #[test]
    fn lengths() {
        assert_eq!(Perm::identity(5).length(), 0);
        assert_eq!(p("3412").length(), 4);
        assert_eq!(p("4123").length(), 3);
    }

    #[test]
    fn canonical_equality() {
        assert_eq!(p("213"), p("21"));
        assert_eq!(Perm::identity(1), Perm::identity(4));
        assert_ne!(p("2134"), p("1243"));
        assert_eq!("3 4 1 2".parse::<Perm>().unwrap(), p("3412"));
        assert!(Perm::from_one_line(vec![1, 1]).is_err());
        assert_eq!(p("3412").to_string(), "3 4 1 2");
    }

    #[test]
    fn grassmannian_examples() {
        assert_eq!(grassmannian_encode(&Partition::empty(), 2, 4).unwrap(), Perm::identity(4));
        assert_eq!(grassmannian_encode(&part(&[2]), 1, 4).unwrap(), p("3124"));
        assert_eq!(grassmannian_encode(&part(&[2]), 2, 4).unwrap(), p("1423"));
        assert!(matches!(
            grassmannian_encode(&part(&[3]), 2, 4),
            Err(Error::PartitionDoesNotFit { .. })
        ));
        assert!(grassmannian_encode(&part(&[1, 1, 1]), 2, 6).is_err());
    }

    #[test]
    fn grassmannian_round_trip() {
        for n in 1..=6 {
            for d in 1..n {
                for w in Perm::all(n) {
                    if w.descents() == vec![d] {
                        let (lambda, d2) = grassmannian_decode(&w).unwrap();
                        assert_eq!(d2, d);
                        assert_eq!(grassmannian_encode(&lambda, d, n).unwrap().one_line(), w.one_line());
                    }
                }
            }
        }
    }

    #[test]
    fn bigrassmannian_examples() {
        assert!(bigrassmannian_encode(2, 3, 2, 5).unwrap().is_identity());
        assert_eq!(bigrassmannian_encode(1, 2, 0, 4).unwrap(), p("3124"));
        assert_eq!(bigrassmannian_encode(2, 3, 1, 4).unwrap(), p("1423"));
        assert!(bigrassmannian_encode(3, 3, 0, 4).is_err());
        assert!(bigrassmannian_encode(0, 1, 0, 4).is_err());
    }

    #[test]
    fn bigrassmannian_properties() {
        use crate::asm::GridCell;
        for n in 2..=5 {
            for i in 1..n {
                for j in 1..n {
                    for r in 0..i.min(j) {
                        if i + j - r > n {
                            continue;
                        }
                        let u = bigrassmannian_encode(i, j, r, n).unwrap();
                        let a = u.to_asm();
                        assert_eq!(
                            a.essential_set().into_iter().collect::<Vec<_>>(),
                            vec![GridCell::new(i, j)]
                        );
                        assert_eq!(a.corner_sum().get(i, j) as usize, r);
                        assert_eq!(u.descents(), vec![i]);
                        let (lambda, _) = grassmannian_decode(&u).unwrap();
                        assert_eq!(lambda, Partition::rectangle(i - r, j - r));
                        assert!(is_bigrassmannian(&u));
                    }
                }
            }
        }
    }

    #[test]
    fn shape_tuple_examples() {
        let single = asm_from_shape_tuple(&[part(&[2])], &[1]).unwrap();
        assert_eq!(single.to_perm().unwrap(), p("3124"));
        let a = asm_from_shape_tuple(&[part(&[2]), part(&[2])], &[1, 2]).unwrap();
        assert_eq!(a, noneqi());
        assert_eq!(
            asm_from_shape_tuple(&[part(&[1])], &[1, 2]).unwrap_err(),
            Error::ShapeLengthMismatch(1, 2)
        );
        assert!(matches!(
            asm_from_shape_tuple(&[part(&[1, 1])], &[1]),
            Err(Error::DescentTooSmall { d: 1, len: 2 })
        ));
    }

    #[test]
    fn bigr_examples() {
        assert!(bigr_of(&Asm::identity(4)).is_empty());
        let a = Asm::parse("0 0 0 1\n0 1 0 0\n1 -1 1 0\n0 1 0 0\n").unwrap();
        let expected: BTreeSet<Perm> = [(1, 3, 0), (2, 1, 0), (3, 2, 1)]
            .iter()
            .map(|&(i, j, r)| bigrassmannian_encode(i, j, r, 4).unwrap())
            .collect();
        assert_eq!(bigr_of(&a), expected);
        let expected: BTreeSet<Perm> = [p("3124"), p("1423")].into_iter().collect();
        assert_eq!(bigr_of(&noneqi()), expected);
    }

    #[test]
    fn perm_set_examples() {
        let w = p("2413");
        assert_eq!(perm_set(&w.to_asm()).into_iter().collect::<Vec<_>>(), vec![w.clone()]);
        assert_eq!(deg(&w.to_asm()), w.length());
        let a = noneqi();
        let ps: Vec<Perm> = perm_set(&a).into_iter().collect();
        assert_eq!(ps, vec![p("3412"), p("4123")]);
        assert_eq!(min_perm_set(&a).into_iter().collect::<Vec<_>>(), vec![p("4123")]);
        assert_eq!(deg(&a), 3);
        let deg_example = Asm::parse("0 0 1 0\n0 1 -1 1\n1 -1 1 0\n0 1 0 0\n").unwrap();
        assert_eq!(deg(&deg_example), 4);
        assert_eq!(deg_example.rothe_diagram().len(), 5);
    }

    #[test]
    fn demazure_examples() {
        assert_eq!(word(&[2, 1, 3, 2]).demazure_product(), p("3412"));
        assert_eq!(word(&[1, 1]).demazure_product(), p("21"));
        assert_eq!(word(&[3, 3, 2]).demazure_product(), word(&[3, 2]).product());
        assert_eq!(word(&[3, 3, 2]).product(), word(&[2]).product());
    }

    #[test]
    fn reduced_words() {
        assert!(Word::default().is_reduced());
        assert!(Word::default().product().is_identity());
        assert!(word(&[3, 2, 1]).is_reduced());
        assert_eq!(word(&[3, 2, 1]).product(), p("4123"));
        assert!(word(&[2, 1, 3, 2]).is_reduced());
        assert_eq!(word(&[2, 1, 3, 2]).product(), p("3412"));
        assert!(!word(&[3, 3, 2]).is_reduced());
        assert_eq!("3,2,1".parse::<Word>().unwrap(), word(&[3, 2, 1]));
        assert_eq!(word(&[3, 2, 1]).to_string(), "3,2,1");
        assert_eq!(Word::new(vec![0]).unwrap_err(), Error::InvalidLetter(0));
    }

    #[test]
    fn bruhat_examples() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for w in &all {
            assert!(bruhat_leq(w, w));
            assert!(bruhat_leq(&Perm::identity(4), w));
        }
        assert!(!bruhat_leq(&p("3412"), &p("4123")));
        assert!(!bruhat_leq(&p("4123"), &p("3412")));
    }
}
