//! Finite presentations of solvable polynomial algebras.

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

/// The commutation rule `a_j a_i = λ a_i a_j + tail` for a pair `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lambda: Scalar,
    pub tail: Polynomial,
}

impl Relation {
    pub fn is_commuting(&self) -> bool {
        self.lambda.is_one() && self.tail.is_zero()
    }

    /// The right-hand side `λ a_i a_j + tail` as one polynomial.
    pub fn rhs(&self, i: usize, j: usize) -> Polynomial {
        let n = self.tail.nvars();
        let mut p = self.tail.clone();
        p.add_term(Monomial::var(n, i).inc(j), self.lambda.clone());
        p
    }
}

/// Generators `a_1, …, a_n` over a field with one relation per pair
/// `i < j`. Pairs that were never set commute.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraPresentation {
    names: Vec<String>,
    field: Field,
    // Pair (i, j), i < j, lives at j*(j-1)/2 + i.
    relations: Vec<Relation>,
}

fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

impl AlgebraPresentation {
    /// The commutative polynomial ring on `names`.
    pub fn new(names: Vec<String>, field: Field) -> Result<Self> {
        for (k, name) in names.iter().enumerate() {
            if names[..k].contains(name) {
                return Err(AlgebraError::DuplicateGenerator(name.clone()));
            }
        }
        let n = names.len();
        let commuting = Relation { lambda: field.one(), tail: Polynomial::zero(n) };
        Ok(AlgebraPresentation { names, field, relations: vec![commuting; n * n.saturating_sub(1) / 2] })
    }

    /// Commutative ring on generators named `a1, …, an`.
    pub fn commutative(n: usize, field: Field) -> Self {
        Self::new((1..=n).map(|k| format!("a{k}")).collect(), field).expect("generated names are distinct")
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Install `a_j a_i = λ a_i a_j + tail`.
    pub fn set_relation(&mut self, i: usize, j: usize, lambda: Scalar, tail: Polynomial) -> Result<()> {
        let n = self.nvars();
        if !(i < j && j < n) {
            return Err(AlgebraError::BadRelationIndex { i, j, n });
        }
        if lambda.is_zero() {
            return Err(AlgebraError::ZeroLambda { i, j });
        }
        tail.monomials().try_for_each(|m| m.check_len(n))?;
        if tail.nvars() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, found: tail.nvars() });
        }
        if lambda.field() != self.field || tail.field().is_some_and(|f| f != self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        self.relations[pair_index(i, j)] = Relation { lambda, tail };
        Ok(())
    }

    /// Install a relation given its full right-hand side `λ a_i a_j + tail`.
    pub fn set_relation_rhs(&mut self, i: usize, j: usize, rhs: &Polynomial) -> Result<()> {
        let n = self.nvars();
        if !(i < j && j < n) {
            return Err(AlgebraError::BadRelationIndex { i, j, n });
        }
        let key = Monomial::var(n, i).inc(j);
        let lambda = rhs.coefficient(&key).cloned().ok_or(AlgebraError::ZeroLambda { i, j })?;
        let tail = rhs.filter_terms(|m| *m != key);
        self.set_relation(i, j, lambda, tail)
    }

    /// The relation for `i < j`.
    pub fn relation(&self, i: usize, j: usize) -> &Relation {
        debug_assert!(i < j && j < self.nvars());
        &self.relations[pair_index(i, j)]
    }

    /// All pairs `(i, j, relation)` with `i < j`, ordered by `(i, j)`.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize, &Relation)> + '_ {
        let n = self.nvars();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.relation(i, j))))
    }

    pub fn is_commutative(&self) -> bool {
        self.relations.iter().all(Relation::is_commuting)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(self.nvars(), i), self.field)
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial {
        Polynomial::monomial(m, self.field)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars(), self.field)
    }

    pub fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(AlgebraError::DimensionMismatch { expected: self.nvars(), found: f.nvars() });
        }
        if f.field().is_some_and(|k| k != self.field) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(())
    }
}
