//! Monomial orderings on the PBW basis.

use std::cmp::Ordering;

use crate::degree::DegreeFunction;
use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::par::{self, Exec};
use crate::poly::Polynomial;

/// A total, multiplicative well-ordering on exponent vectors.
///
/// Lex-type kinds carry a generator permutation `order`, listing generator
/// indices from the largest variable to the smallest, so `lex(a1>a2>a3)` and
/// `lex(a3>a2>a1)` are both expressible without renaming generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    Lex { order: Vec<usize> },
    Grlex { weights: DegreeFunction, order: Vec<usize> },
    Grevlex { weights: DegreeFunction, order: Vec<usize> },
    /// Degree first, `base` on ties.
    Graded { base: Box<MonomialOrdering>, degree: DegreeFunction },
    /// Orders `ã^α Z^s` by `α` under `base`, then by the trailing `Z` exponent.
    ReesExtension { base: Box<MonomialOrdering> },
}

fn check_permutation(order: &[usize]) -> Result<()> {
    let mut seen = vec![false; order.len()];
    for &i in order {
        if i >= order.len() || std::mem::replace(&mut seen[i], true) {
            return Err(AlgebraError::InvalidOrdering(format!("{order:?} is not a permutation")));
        }
    }
    Ok(())
}

fn lex_cmp(order: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &i in order {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn revlex_cmp(order: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &i in order.iter().rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

fn weighted(weights: &DegreeFunction, m: &[u32]) -> u128 {
    m.iter().zip(weights.weights()).map(|(&e, &w)| e as u128 * w as u128).sum()
}

impl MonomialOrdering {
    pub fn lex(order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        Ok(MonomialOrdering::Lex { order })
    }

    /// Lex with `a_1 ≻ a_2 ≻ ⋯ ≻ a_n`.
    pub fn lex_natural(n: usize) -> Self {
        MonomialOrdering::Lex { order: (0..n).collect() }
    }

    pub fn grlex(weights: DegreeFunction, order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        Self::check_nvars(weights.nvars(), order.len())?;
        Ok(MonomialOrdering::Grlex { weights, order })
    }

    pub fn grevlex(weights: DegreeFunction, order: Vec<usize>) -> Result<Self> {
        check_permutation(&order)?;
        Self::check_nvars(weights.nvars(), order.len())?;
        Ok(MonomialOrdering::Grevlex { weights, order })
    }

    /// The degree-first composite `≺_gr`: compare `d` first, `base` on ties.
    pub fn make_graded(base: MonomialOrdering, degree: DegreeFunction) -> Result<Self> {
        Self::check_nvars(base.nvars(), degree.nvars())?;
        Ok(MonomialOrdering::Graded { base: Box::new(base), degree })
    }

    /// The ordering on `n + 1` variables (Z last) induced by `base` on the
    /// first `n`, breaking ties by the exponent of Z.
    pub fn rees_extension(base: MonomialOrdering) -> Self {
        MonomialOrdering::ReesExtension { base: Box::new(base) }
    }

    fn check_nvars(expected: usize, found: usize) -> Result<()> {
        if expected != found {
            return Err(AlgebraError::DimensionMismatch { expected, found });
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        match self {
            MonomialOrdering::Lex { order }
            | MonomialOrdering::Grlex { order, .. }
            | MonomialOrdering::Grevlex { order, .. } => order.len(),
            MonomialOrdering::Graded { base, .. } => base.nvars(),
            MonomialOrdering::ReesExtension { base } => base.nvars() + 1,
        }
    }

    /// Comparison without a length check; both monomials must have
    /// `self.nvars()` exponents.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exps(), b.exps())
    }

    fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrdering::Lex { order } => lex_cmp(order, a, b),
            MonomialOrdering::Grlex { weights, order } => {
                weighted(weights, a).cmp(&weighted(weights, b)).then_with(|| lex_cmp(order, a, b))
            }
            MonomialOrdering::Grevlex { weights, order } => {
                weighted(weights, a).cmp(&weighted(weights, b)).then_with(|| revlex_cmp(order, a, b))
            }
            MonomialOrdering::Graded { base, degree } => {
                weighted(degree, a).cmp(&weighted(degree, b)).then_with(|| base.cmp_exps(a, b))
            }
            MonomialOrdering::ReesExtension { base } => {
                let n = a.len() - 1;
                base.cmp_exps(&a[..n], &b[..n]).then_with(|| a[n].cmp(&b[n]))
            }
        }
    }

    /// Total-order verdict for two exponent vectors of the right length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_len(self.nvars())?;
        b.check_len(self.nvars())?;
        Ok(self.cmp(a, b))
    }

    pub fn less(&self, a: &Monomial, b: &Monomial) -> bool {
        self.cmp(a, b) == Ordering::Less
    }

    /// `LM(f)`: the largest monomial in the support of `f`.
    pub fn leading_monomial(&self, f: &Polynomial) -> Result<Monomial> {
        f.nvars().eq(&self.nvars()).then_some(()).ok_or(AlgebraError::DimensionMismatch {
            expected: self.nvars(),
            found: f.nvars(),
        })?;
        f.monomials().max_by(|a, b| self.cmp(a, b)).cloned().ok_or(AlgebraError::LeadingMonomialOfZero)
    }

    /// Check degree compatibility of `self` with `d` on the box `[0, bound]^n`:
    /// `α ≺ β ⇒ d(α) ≤ d(β)` and `d(α) < d(β) ⇒ α ≺ β`.
    pub fn is_graded_wrt(&self, d: &DegreeFunction, bound: u32) -> Result<GradedCheck> {
        self.is_graded_wrt_with(d, bound, Exec::default())
    }

    pub fn is_graded_wrt_with(&self, d: &DegreeFunction, bound: u32, exec: Exec) -> Result<GradedCheck> {
        Self::check_nvars(self.nvars(), d.nvars())?;
        let all = Monomial::enumerate_box(self.nvars(), bound);
        let degrees = all.iter().map(|m| d.deg_monomial(m)).collect::<Result<Vec<_>>>()?;
        let indices: Vec<usize> = (0..all.len()).collect();
        // Most severe violation per row: ord says `all[i] ≻ all[j]` yet
        // d(all[i]) < d(all[j]). Both halves of the property fail exactly on
        // such pairs.
        let rows = par::map_collect(
            exec,
            &indices,
            || (),
            |_, &i| {
                let mut best: Option<(u64, usize)> = None;
                for j in 0..all.len() {
                    if degrees[i] < degrees[j] && self.cmp(&all[i], &all[j]) == Ordering::Greater {
                        let gap = degrees[j] - degrees[i];
                        if best.is_none_or(|(g, _)| gap > g) {
                            best = Some((gap, j));
                        }
                    }
                }
                best.map(|(gap, j)| (gap, i, j))
            },
        );
        let worst = rows.into_iter().flatten().fold(None, |acc: Option<(u64, usize, usize)>, cur| match acc {
            Some(a) if a.0 >= cur.0 => Some(a),
            _ => Some(cur),
        });
        Ok(match worst {
            None => GradedCheck::Pass,
            Some((_, i, j)) => GradedCheck::Fail {
                ord_greater: all[i].clone(),
                ord_lesser: all[j].clone(),
                degree_greater: degrees[i],
                degree_lesser: degrees[j],
            },
        })
    }
}

/// Outcome of [`MonomialOrdering::is_graded_wrt`]. A failure names the pair
/// with the widest degree gap (first such pair in box order on ties).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedCheck {
    Pass,
    Fail { ord_greater: Monomial, ord_lesser: Monomial, degree_greater: u64, degree_lesser: u64 },
}

impl GradedCheck {
    pub fn passed(&self) -> bool {
        matches!(self, GradedCheck::Pass)
    }
}
