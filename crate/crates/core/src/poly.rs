//! Sparse polynomials in the PBW basis.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::scalar::{Field, Scalar};

/// A finite K-linear combination of PBW monomials.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty
/// map. `nvars` is kept separately so that zero still knows its dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Self::constant(nvars, field.one())
    }

    /// `c · a^m`, which is zero when `c` is.
    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = Polynomial::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial, field: Field) -> Self {
        Self::term(m, field.one())
    }

    /// Build from `(monomial, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            m.check_len(nvars)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The field of the coefficients, or `None` for the zero polynomial.
    pub fn field(&self) -> Option<Field> {
        self.terms.values().next().map(Scalar::field)
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, Scalar> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms.get(m)
    }

    /// True when `self` is exactly `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().next().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// Add `c · a^m` in place, pruning a coefficient that cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Scalar) -> Result<()> {
        if other.nvars != self.nvars {
            return Err(AlgebraError::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        if c.is_zero() {
            return Ok(());
        }
        for (m, a) in &other.terms {
            let prod = if c.is_one() { a.clone() } else { a * c };
            self.add_term(m.clone(), prod);
        }
        Ok(())
    }

    /// `f + c·g` with zero coefficients pruned.
    pub fn combine(f: &Polynomial, g: &Polynomial, c: &Scalar) -> Result<Polynomial> {
        let mut out = f.clone();
        out.add_scaled(g, c)?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), -a)).collect() }
    }

    /// Apply a monomial map to every term, merging terms that collide.
    pub fn map_monomials<F>(&self, nvars: usize, mut f: F) -> Polynomial
    where
        F: FnMut(&Monomial) -> Monomial,
    {
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Keep only the terms whose monomial satisfies `keep`.
    pub fn filter_terms<F>(&self, mut keep: F) -> Polynomial
    where
        F: FnMut(&Monomial) -> bool,
    {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Terms sorted from the ordering's largest monomial down.
    pub fn sorted_terms(&self, ord: &MonomialOrdering) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    /// Canonical text form, terms in decreasing `ord` order, e.g.
    /// `a1*a3 + a2^2*a3 - 3/2*a2^6`.
    pub fn display<'a>(&'a self, names: &'a [String], ord: &'a MonomialOrdering) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names, ord }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
    ord: &'a MonomialOrdering,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.sorted_terms(self.ord).into_iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{abs}*{}", m.display(self.names))?;
            }
        }
        Ok(())
    }
}
