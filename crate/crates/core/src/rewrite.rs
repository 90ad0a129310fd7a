//! PBW normal-form multiplication and the checks that justify it.
//!
//! A product `a^α · a^β` is normalized by moving generators across the
//! boundary between the two factors one at a time: the last generator `a_j`
//! of `a^α` is pushed into `a^β` by rewriting each adjacent out-of-order
//! pair `a_j a_i` (`j > i`) with `λ_ji a_i a_j + f_ji`, and every spilled
//! tail term is multiplied out recursively. On a presentation that passes
//! [`check_solvable`] every tail is strictly smaller than the word it
//! replaces, so the recursion terminates.

use rustc_hash::FxHashMap as HashMap;
use std::rc::Rc;

use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::par::{self, Exec};
use crate::poly::Polynomial;
use crate::presentation::AlgebraPresentation;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

// Recursion depth is bounded separately from the step budget so that a
// runaway presentation fails with an error instead of overflowing the stack.
const MAX_DEPTH: usize = 2_000;

/// Multiplication engine bound to one presentation, with a product cache
/// and a rewrite-step budget.
pub struct Multiplier<'a> {
    pres: &'a AlgebraPresentation,
    budget: u64,
    steps: u64,
    depth: usize,
    mono_cache: HashMap<(Monomial, Monomial), Rc<Polynomial>>,
    gen_cache: HashMap<(usize, Monomial), Rc<Polynomial>>,
}

impl<'a> Multiplier<'a> {
    pub fn new(pres: &'a AlgebraPresentation) -> Self {
        Self::with_budget(pres, DEFAULT_BUDGET)
    }

    pub fn with_budget(pres: &'a AlgebraPresentation, budget: u64) -> Self {
        Multiplier { pres, budget, steps: 0, depth: 0, mono_cache: HashMap::default(), gen_cache: HashMap::default() }
    }

    pub fn presentation(&self) -> &'a AlgebraPresentation {
        self.pres
    }

    /// Relation applications performed since the last reset.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    pub fn reset_steps(&mut self) {
        self.steps = 0;
    }

    fn step(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(AlgebraError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            self.depth -= 1;
            return Err(AlgebraError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// PBW normal form of `a^α · a^β`.
    pub fn mul_monomials(&mut self, a: &Monomial, b: &Monomial) -> Result<Polynomial> {
        Ok((*self.mul_monomials_shared(a, b)?).clone())
    }

    /// As [`Self::mul_monomials`], sharing the cached result.
    pub fn mul_monomials_shared(&mut self, a: &Monomial, b: &Monomial) -> Result<Rc<Polynomial>> {
        let n = self.pres.nvars();
        a.check_len(n)?;
        b.check_len(n)?;
        self.mono_product(a, b)
    }

    fn mono_product(&mut self, a: &Monomial, b: &Monomial) -> Result<Rc<Polynomial>> {
        let field = self.pres.field();
        let j = match (a.last_var(), b.first_var()) {
            (Some(j), Some(i)) if j > i => j,
            _ => return Ok(Rc::new(Polynomial::monomial(a.add_unchecked(b), field))),
        };
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.mono_cache.get(&key) {
            return Ok(Rc::clone(hit));
        }
        self.enter()?;
        let out = self.mono_product_uncached(j, a, b);
        self.depth -= 1;
        let out = Rc::new(out?);
        self.mono_cache.insert(key, Rc::clone(&out));
        Ok(out)
    }

    // a^α · a^β = a^{α - e_j} · (a_j · a^β)
    fn mono_product_uncached(&mut self, j: usize, a: &Monomial, b: &Monomial) -> Result<Polynomial> {
        let pushed = self.gen_times(j, b)?;
        let rest = a.dec(j);
        if rest.is_one() {
            return Ok((*pushed).clone());
        }
        let mut out = Polynomial::zero(self.pres.nvars());
        for (m, c) in pushed.terms() {
            self.product_into(&mut out, &rest, m, c)?;
        }
        Ok(out)
    }

    /// PBW normal form of `a_j · a^β`.
    fn gen_times(&mut self, j: usize, b: &Monomial) -> Result<Rc<Polynomial>> {
        let field = self.pres.field();
        let i = match b.first_var() {
            Some(i) if i < j => i,
            _ => return Ok(Rc::new(Polynomial::monomial(b.inc(j), field))),
        };
        let key = (j, b.clone());
        if let Some(hit) = self.gen_cache.get(&key) {
            return Ok(Rc::clone(hit));
        }
        self.enter()?;
        let out = self.gen_times_uncached(i, j, b);
        self.depth -= 1;
        let out = Rc::new(out?);
        self.gen_cache.insert(key, Rc::clone(&out));
        Ok(out)
    }

    fn gen_times_uncached(&mut self, i: usize, j: usize, b: &Monomial) -> Result<Polynomial> {
        self.step()?;
        let pres = self.pres;
        let rel = pres.relation(i, j);
        let rest = b.dec(i);
        let mut out = Polynomial::zero(pres.nvars());
        // a_j a_i a^rest = λ a_i (a_j a^rest) + f_ji a^rest
        let inner = self.gen_times(j, &rest)?;
        for (m, c) in inner.terms() {
            let part = self.gen_times(i, m)?;
            out.add_scaled(&part, &(c * &rel.lambda))?;
        }
        for (m, c) in rel.tail.terms() {
            self.product_into(&mut out, m, &rest, c)?;
        }
        Ok(out)
    }

    /// `out += c · a^α a^β`.
    fn product_into(&mut self, out: &mut Polynomial, a: &Monomial, b: &Monomial, c: &crate::Scalar) -> Result<()> {
        match (a.last_var(), b.first_var()) {
            (Some(j), Some(i)) if j > i => {
                let part = self.mono_product(a, b)?;
                out.add_scaled(&part, c)
            }
            _ => {
                out.add_term(a.add_unchecked(b), c.clone());
                Ok(())
            }
        }
    }

    /// Bilinear extension of [`Self::mul_monomials`].
    pub fn mul(&mut self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        self.pres.check_poly(f)?;
        self.pres.check_poly(g)?;
        let mut out = Polynomial::zero(self.pres.nvars());
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                self.product_into(&mut out, a, b, &(ca * cb))?;
            }
        }
        Ok(out)
    }

    /// `f · a^β` for a single monomial on the right.
    pub fn mul_poly_monomial(&mut self, f: &Polynomial, b: &Monomial) -> Result<Polynomial> {
        b.check_len(self.pres.nvars())?;
        let mut out = Polynomial::zero(self.pres.nvars());
        for (a, c) in f.terms() {
            self.product_into(&mut out, a, b, c)?;
        }
        Ok(out)
    }

    /// `a^α · g` for a single monomial on the left.
    pub fn mul_monomial_poly(&mut self, a: &Monomial, g: &Polynomial) -> Result<Polynomial> {
        a.check_len(self.pres.nvars())?;
        let mut out = Polynomial::zero(self.pres.nvars());
        for (b, c) in g.terms() {
            self.product_into(&mut out, a, b, c)?;
        }
        Ok(out)
    }

    /// Product of a sequence of polynomials, left to right.
    pub fn mul_all(&mut self, factors: &[&Polynomial]) -> Result<Polynomial> {
        let mut acc = self.pres.one();
        for f in factors {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }
}

impl AlgebraPresentation {
    /// `f · g` in PBW normal form with the default step budget.
    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        Multiplier::new(self).mul(f, g)
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Polynomial> {
        Multiplier::new(self).mul_monomials(a, b)
    }
}

/// Outcome of [`check_solvable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolvableReport {
    Pass,
    /// `LM(f_ji)` is not below `a_i a_j`.
    Fail { i: usize, j: usize, leading: Monomial },
}

impl SolvableReport {
    pub fn passed(&self) -> bool {
        matches!(self, SolvableReport::Pass)
    }
}

/// Pairwise solvability: every tail is zero or has leading monomial strictly
/// below `a_i a_j` under `ord`. Nonzero `λ` is an invariant of
/// [`AlgebraPresentation`] and needs no check here.
pub fn check_solvable(pres: &AlgebraPresentation, ord: &MonomialOrdering) -> Result<SolvableReport> {
    let n = pres.nvars();
    if ord.nvars() != n {
        return Err(AlgebraError::DimensionMismatch { expected: n, found: ord.nvars() });
    }
    for (i, j, rel) in pres.relations() {
        if rel.tail.is_zero() {
            continue;
        }
        let lm = ord.leading_monomial(&rel.tail)?;
        let target = Monomial::var(n, i).inc(j);
        if !ord.less(&lm, &target) {
            return Ok(SolvableReport::Fail { i, j, leading: lm });
        }
    }
    Ok(SolvableReport::Pass)
}

/// Outcome of [`check_pbw_confluence`]; triples are `(i, j, k)` with `i < j < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfluenceReport {
    Pass,
    /// `((a_k a_j) a_i)` reduced to `left`, `(a_k (a_j a_i))` to `right`.
    Diverges { triple: (usize, usize, usize), left: Polynomial, right: Polynomial },
    BudgetExceeded { triple: (usize, usize, usize), budget: u64 },
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        matches!(self, ConfluenceReport::Pass)
    }
}

/// Both reductions of the overlap `a_k a_j a_i`.
pub fn reduce_overlap(mult: &mut Multiplier<'_>, i: usize, j: usize, k: usize) -> Result<(Polynomial, Polynomial)> {
    let pres = mult.presentation();
    let left = mult.mul(&pres.relation(j, k).rhs(j, k), &pres.var(i))?;
    let right = mult.mul(&pres.var(k), &pres.relation(i, j).rhs(i, j))?;
    Ok((left, right))
}

/// Diamond-lemma overlap check on every generator triple.
pub fn check_pbw_confluence(pres: &AlgebraPresentation, budget: u64) -> Result<ConfluenceReport> {
    check_pbw_confluence_with(pres, budget, Exec::default())
}

pub fn check_pbw_confluence_with(pres: &AlgebraPresentation, budget: u64, exec: Exec) -> Result<ConfluenceReport> {
    let n = pres.nvars();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
        .collect();
    let hit = par::find_map_first(
        exec,
        &triples,
        || Multiplier::with_budget(pres, budget),
        |mult, &(i, j, k)| {
            mult.reset_steps();
            match reduce_overlap(mult, i, j, k) {
                Ok((left, right)) if left == right => None,
                Ok((left, right)) => Some(Ok(ConfluenceReport::Diverges { triple: (i, j, k), left, right })),
                Err(AlgebraError::BudgetExceeded(budget)) => {
                    // The cache may hold partial work from the aborted triple's
                    // siblings only, never from the failed computation itself.
                    Some(Ok(ConfluenceReport::BudgetExceeded { triple: (i, j, k), budget }))
                }
                Err(e) => Some(Err(e)),
            }
        },
    );
    hit.unwrap_or(Ok(ConfluenceReport::Pass))
}

/// A monomial triple on which the two bracketings disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativityViolation {
    pub factors: [Monomial; 3],
    pub left: Polynomial,
    pub right: Polynomial,
}

/// Exhaustive `(ab)c = a(bc)` over all monomial triples in `[0, bound]^n`.
pub fn check_associativity(pres: &AlgebraPresentation, bound: u32, exec: Exec) -> Result<Option<AssociativityViolation>> {
    let all = Monomial::enumerate_box(pres.nvars(), bound);
    check_associativity_on(pres, &all, exec)
}

/// `(ab)c = a(bc)` for all triples drawn from `monomials`.
pub fn check_associativity_on(
    pres: &AlgebraPresentation,
    monomials: &[Monomial],
    exec: Exec,
) -> Result<Option<AssociativityViolation>> {
    let hit = par::find_map_first(
        exec,
        monomials,
        || Multiplier::new(pres),
        |mult, a| {
            let run = |mult: &mut Multiplier<'_>| -> Result<Option<AssociativityViolation>> {
                for b in monomials {
                    let ab = mult.mul_monomials_shared(a, b)?;
                    for c in monomials {
                        let left = mult.mul_poly_monomial(&ab, c)?;
                        let bc = mult.mul_monomials_shared(b, c)?;
                        let right = mult.mul_monomial_poly(a, &bc)?;
                        if left != right {
                            return Ok(Some(AssociativityViolation {
                                factors: [a.clone(), b.clone(), c.clone()],
                                left,
                                right,
                            }));
                        }
                    }
                }
                Ok(None)
            };
            run(mult).transpose()
        },
    );
    hit.transpose()
}
