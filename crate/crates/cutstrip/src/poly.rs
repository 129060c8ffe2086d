//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! This is the exact evaluation ring for every Schur computation in the
//! crate. Terms are kept in a vector sorted by graded-lex monomial order,
//! so iteration, equality and printing are deterministic; sums merge and
//! products sort-and-coalesce. Coefficients are `BigInt` throughout; there
//! is no machine-integer fast path.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Exponent vector of a single monomial in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

/// Graded lexicographic: compare total degree first, then exponents.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with `BigInt` coefficients. Zero coefficients are never
/// stored; all exponent vectors have length `nvars`; terms stay sorted in
/// ascending graded-lex order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, BigInt)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.push((Monomial::constant(nvars), c));
        }
        p
    }

    /// The variable x_{index+1} (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.push((Monomial::var(nvars, index), BigInt::one()));
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Self {
        let mut collected: Vec<(Monomial, BigInt)> = terms.into_iter().collect();
        for (m, _) in &collected {
            assert_eq!(m.0.len(), nvars);
        }
        collected.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Polynomial {
            nvars,
            terms: coalesce_sorted(collected),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::constant(self.nvars))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(self * other)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading term first: descending graded-lex.
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_string(m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn monomial_string(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

/// Division-free determinant of a square matrix of polynomials.
///
/// Laplace expansion over column subsets: `minors[S]` is the minor on the
/// first `|S|` rows and column set `S`, built by expanding along the last of
/// those rows. O(2^m * m) polynomial multiply-adds, exact over the integers.
pub fn det(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let m = matrix.len();
    if m == 0 {
        return Ok(Polynomial::one(0));
    }
    let nvars = matrix[0][0].nvars();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != m {
            return Err(Error::NotSquare {
                rows: m,
                cols: row.len(),
                row: i,
            });
        }
        for entry in row {
            if entry.nvars() != nvars {
                return Err(Error::NvarsMismatch(nvars, entry.nvars()));
            }
        }
    }
    assert!(m <= 20, "determinant order {m} too large for subset expansion");

    let full = (1usize << m) - 1;
    let mut minors: Vec<Option<Polynomial>> = vec![None; full + 1];
    minors[0] = Some(Polynomial::one(nvars));
    // Masks grouped by popcount so each minor's sub-minors already exist.
    let mut by_count: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for mask in 1..=full {
        by_count[mask.count_ones() as usize].push(mask);
    }
    for k in 1..=m {
        for &mask in &by_count[k] {
            let row = k - 1;
            let mut acc = Polynomial::zero(nvars);
            let mut idx = 0usize;
            for col in 0..m {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = &matrix[row][col];
                if !entry.is_zero() {
                    let sub = minors[mask ^ (1 << col)]
                        .as_ref()
                        .expect("sub-minor computed");
                    if !sub.is_zero() {
                        let prod = entry * sub;
                        if (row + idx) % 2 == 0 {
                            acc = &acc + &prod;
                        } else {
                            acc = &acc - &prod;
                        }
                    }
                }
                idx += 1;
            }
            minors[mask] = Some(acc);
        }
        // Minors of lower popcount are no longer needed; free the memory.
        if k >= 2 {
            for &mask in &by_count[k - 2] {
                minors[mask] = None;
            }
        }
    }
    Ok(minors[full].take().expect("full minor computed"))
}
