//! Sparse multivariate polynomials in `x1, x2, ...` with arbitrary-precision
//! integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A monomial `x1^e1 * x2^e2 * ...`, stored as its exponent vector with
/// trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial { exponents }
    }

    /// The single variable `x_i` (1-based).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are 1-based");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Monomial { exponents: e }
    }

    /// Exponent of `x_i` (1-based); zero past the stored length.
    pub fn exponent(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.exponents.get(i - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    /// Multiply in `x_i^k`.
    pub fn mul_var(&mut self, i: usize, k: u32) {
        if k == 0 {
            return;
        }
        if self.exponents.len() < i {
            self.exponents.resize(i, 0);
        }
        self.exponents[i - 1] += k;
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exponents.len().max(other.exponents.len());
        let e = (1..=len)
            .map(|i| self.exponent(i) + other.exponent(i))
            .collect();
        Monomial::new(e)
    }

    /// Product of `x_i` over the given variable indices, with repetition.
    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        let mut m = Monomial::one();
        for v in vars {
            m.mul_var(v, 1);
        }
        m
    }
}

/// Graded lexicographic: higher total degree first, ties broken by
/// comparing exponents of `x1, x2, ...` in turn.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let len = self.exponents.len().max(other.exponents.len());
                (1..=len)
                    .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", idx + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial as a map from monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::from(Monomial::one())
    }

    /// Sum of the given monomials, counted with multiplicity.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(ms: I) -> Self {
        let mut p = Polynomial::zero();
        for m in ms {
            p.add_term(m, BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in rendering order (graded lex, highest first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn min_total_degree(&self) -> Result<u64> {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .min()
            .ok_or(Error::UndefinedDegree)
    }

    /// Value at `x1 = x2 = ... = 1`, i.e. the coefficient sum.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiply every term by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, BigInt::one());
        p
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let is_const = m.exponents.is_empty();
            if is_const {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else if c.is_negative() && c.abs().is_one() {
                write!(f, "-{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}
