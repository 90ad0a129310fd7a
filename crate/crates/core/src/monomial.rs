use std::fmt;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

/// Exponent vector `α` standing for the PBW word `a_1^α_1 ⋯ a_n^α_n`.
///
/// The derived `Ord` is plain lexicographic comparison of the exponent
/// vectors. It is only used as a storage key; algebraic comparisons go
/// through [`MonomialOrdering`](crate::ordering::MonomialOrdering).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(SmallVec<[u32; 6]>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(SmallVec::from_vec(exps))
    }

    pub fn from_slice(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// The identity monomial on `n` generators.
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    /// The generator `a_i` (0-based) on `n` generators.
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = SmallVec::from_elem(0, n);
        exps[i] = 1;
        Monomial(exps)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Index of the first generator with a positive exponent.
    pub fn first_var(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    /// Index of the last generator with a positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: self.0.len() });
        }
        Ok(())
    }

    /// Exponent-wise sum, i.e. the product in a commutative polynomial ring.
    pub fn try_add(&self, other: &Monomial) -> Result<Monomial> {
        other.check_len(self.nvars())?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.0.clone();
        exps[i] = e;
        Monomial(exps)
    }

    /// Decrement exponent `i`; the caller guarantees it is positive.
    pub(crate) fn dec(&self, i: usize) -> Monomial {
        self.with_exp(i, self.0[i] - 1)
    }

    pub(crate) fn inc(&self, i: usize) -> Monomial {
        self.with_exp(i, self.0[i] + 1)
    }

    /// Append one more exponent (used when adjoining a generator).
    pub fn extended(&self, e: u32) -> Monomial {
        let mut exps = self.0.clone();
        exps.push(e);
        Monomial(exps)
    }

    /// Enumerate every monomial with `n` exponents in `0..=bound`,
    /// in lexicographic order of the exponent vectors.
    pub fn enumerate_box(n: usize, bound: u32) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(n)];
        for i in 0..n {
            out = out
                .into_iter()
                .flat_map(|m| (0..=bound).map(move |e| m.with_exp(i, e)))
                .collect();
        }
        out
    }

    /// Render with generator names, e.g. `a1*a2^2`; the identity prints as `1`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
