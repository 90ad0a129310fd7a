//! Positive-degree functions induced by weight vectors, and the
//! filtration they define on the PBW basis.

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// Weight vector `(m_1, …, m_n)` with every `m_i ≥ 1`, inducing
/// `d(a^α) = Σ α_i m_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeFunction {
    weights: Vec<u64>,
}

impl DegreeFunction {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        let weights = weights
            .into_iter()
            .enumerate()
            .map(|(index, w)| if w >= 1 { Ok(w as u64) } else { Err(AlgebraError::NonPositiveWeight { index, weight: w }) })
            .collect::<Result<Vec<_>>>()?;
        Ok(DegreeFunction { weights })
    }

    pub fn from_weights(weights: Vec<u64>) -> Result<Self> {
        if let Some(index) = weights.iter().position(|&w| w == 0) {
            return Err(AlgebraError::NonPositiveWeight { index, weight: 0 });
        }
        Ok(DegreeFunction { weights })
    }

    /// All weights equal to one (total degree).
    pub fn uniform(n: usize) -> Self {
        DegreeFunction { weights: vec![1; n] }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// The same weights with one more generator of weight `w` appended.
    pub fn extended(&self, w: u64) -> Result<Self> {
        let mut weights = self.weights.clone();
        weights.push(w);
        Self::from_weights(weights)
    }

    pub fn deg_monomial(&self, m: &Monomial) -> Result<u64> {
        m.check_len(self.nvars())?;
        m.exps().iter().zip(&self.weights).try_fold(0u64, |acc, (&e, &w)| {
            (e as u64).checked_mul(w).and_then(|t| acc.checked_add(t)).ok_or(AlgebraError::DegreeOverflow)
        })
    }

    /// `d(f)`, the largest degree among the support of `f`. Undefined for zero.
    pub fn deg_poly(&self, f: &Polynomial) -> Result<u64> {
        let mut best = None;
        for m in f.monomials() {
            let d = self.deg_monomial(m)?;
            best = Some(best.map_or(d, |b: u64| b.max(d)));
        }
        best.ok_or(AlgebraError::DegreeOfZero)
    }

    /// `LH_d(f)`: the sum of the terms of `f` of maximal degree.
    pub fn leading_homogeneous(&self, f: &Polynomial) -> Result<Polynomial> {
        let top = self.deg_poly(f)?;
        Ok(f.filter_terms(|m| self.deg_monomial(m) == Ok(top)))
    }

    /// Membership in `F_p A`, the span of basis monomials of degree `≤ p`.
    pub fn in_filtration_level(&self, f: &Polynomial, p: u64) -> Result<bool> {
        for m in f.monomials() {
            if self.deg_monomial(m)? > p {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when every term of `f` has degree exactly `p` (membership in `A_p`).
    pub fn is_homogeneous_of(&self, f: &Polynomial, p: u64) -> Result<bool> {
        for m in f.monomials() {
            if self.deg_monomial(m)? != p {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
