//! Decision procedures for graded / filtered type with respect to a weight
//! vector, weight discovery, and the exhaustive degree-law check.

use crate::degree::DegreeFunction;
use crate::error::Result;
use crate::fourier_motzkin::{self, Constraint, Relation as Rel};
use crate::monomial::Monomial;
use crate::par::{self, Exec};
use crate::poly::Polynomial;
use crate::presentation::AlgebraPresentation;
use crate::rewrite::Multiplier;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeVerdict {
    Graded,
    FilteredOnly,
    Neither,
}

/// A tail term of relation `(i, j)` whose degree differs from the degree
/// `m_i + m_j` of `a_i a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeWitness {
    pub i: usize,
    pub j: usize,
    pub term: Monomial,
    pub degree: u64,
    pub required: u64,
}

/// Verdict plus the terms responsible for it: for `FilteredOnly` the terms
/// of degree below `m_i + m_j`, for `Neither` the terms above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeReport {
    pub verdict: TypeVerdict,
    pub witnesses: Vec<DegreeWitness>,
}

fn classify(pres: &AlgebraPresentation, d: &DegreeFunction) -> Result<TypeReport> {
    let mut below = Vec::new();
    let mut above = Vec::new();
    for (i, j, rel) in pres.relations() {
        let required = d.weights()[i] + d.weights()[j];
        for m in rel.tail.monomials() {
            let degree = d.deg_monomial(m)?;
            let w = DegreeWitness { i, j, term: m.clone(), degree, required };
            match degree.cmp(&required) {
                std::cmp::Ordering::Less => below.push(w),
                std::cmp::Ordering::Greater => above.push(w),
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    Ok(if !above.is_empty() {
        TypeReport { verdict: TypeVerdict::Neither, witnesses: above }
    } else if !below.is_empty() {
        TypeReport { verdict: TypeVerdict::FilteredOnly, witnesses: below }
    } else {
        TypeReport { verdict: TypeVerdict::Graded, witnesses: Vec::new() }
    })
}

fn check_dims(pres: &AlgebraPresentation, d: &DegreeFunction) -> Result<()> {
    if d.nvars() != pres.nvars() {
        return Err(crate::AlgebraError::DimensionMismatch { expected: pres.nvars(), found: d.nvars() });
    }
    Ok(())
}

/// Graded iff every tail term of every relation has degree exactly
/// `m_i + m_j`; otherwise the filtered verdict is reported.
pub fn check_graded_type(pres: &AlgebraPresentation, d: &DegreeFunction) -> Result<TypeReport> {
    check_dims(pres, d)?;
    classify(pres, d)
}

/// Filtered (or graded) iff every tail term has degree at most `m_i + m_j`.
pub fn check_filtered_type(pres: &AlgebraPresentation, d: &DegreeFunction) -> Result<TypeReport> {
    check_dims(pres, d)?;
    classify(pres, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Graded,
    Filtered,
}

fn weight_constraints(pres: &AlgebraPresentation, mode: WeightMode) -> Vec<Constraint> {
    let n = pres.nvars();
    let rel = match mode {
        WeightMode::Graded => Rel::Eq,
        WeightMode::Filtered => Rel::Le,
    };
    let mut out = Vec::new();
    for (i, j, r) in pres.relations() {
        for m in r.tail.monomials() {
            let mut coeffs: Vec<i64> = m.exps().iter().map(|&e| e as i64).collect();
            coeffs[i] -= 1;
            coeffs[j] -= 1;
            out.push(Constraint::new(coeffs, 0, rel));
        }
    }
    for k in 0..n {
        let mut lo = vec![0; n];
        lo[k] = -1;
        out.push(Constraint::new(lo, 1, Rel::Le));
    }
    out
}

fn satisfied(constraints: &[Constraint], w: &[i64]) -> bool {
    use num_rational::BigRational;
    constraints.iter().all(|c| {
        let v = c
            .coeffs
            .iter()
            .zip(w)
            .fold(c.constant.clone(), |acc, (a, &x)| acc + a * BigRational::from_integer(x.into()));
        match c.rel {
            Rel::Le => v <= BigRational::from_integer(0.into()),
            Rel::Eq => v == BigRational::from_integer(0.into()),
        }
    })
}

/// Search for a weight vector with all `1 ≤ m_i ≤ bound` making `pres`
/// graded (equalities) or filtered (inequalities). Among solutions the one
/// with the smallest `Σ m_i` wins, then the lexicographically smallest.
///
/// Candidates are enumerated depth-first in that order; each partial
/// assignment is pruned by a rational feasibility test of the remaining
/// system, so the search never enters a branch without a rational solution.
pub fn find_weights(pres: &AlgebraPresentation, mode: WeightMode, bound: u64) -> Option<DegreeFunction> {
    let n = pres.nvars();
    if bound == 0 {
        return None;
    }
    if n == 0 {
        return DegreeFunction::from_weights(Vec::new()).ok();
    }
    let base = weight_constraints(pres, mode);
    let bound = bound as i64;
    let with_box = |extra: &mut Vec<Constraint>| {
        for k in 0..n {
            let mut hi = vec![0; n];
            hi[k] = 1;
            extra.push(Constraint::new(hi, -bound, Rel::Le));
        }
    };
    let mut root = base.clone();
    with_box(&mut root);
    if !fourier_motzkin::feasible(&root) {
        return None;
    }
    for total in n as i64..=n as i64 * bound {
        let mut sys = root.clone();
        sys.push(Constraint::new(vec![1; n], -total, Rel::Eq));
        if !fourier_motzkin::feasible(&sys) {
            continue;
        }
        let mut prefix = Vec::with_capacity(n);
        if let Some(w) = search(&sys, &base, n, bound, &mut prefix) {
            return DegreeFunction::from_weights(w.into_iter().map(|x| x as u64).collect()).ok();
        }
    }
    None
}

fn search(sys: &[Constraint], base: &[Constraint], n: usize, bound: i64, prefix: &mut Vec<i64>) -> Option<Vec<i64>> {
    let k = prefix.len();
    if k == n {
        return satisfied(base, prefix).then(|| prefix.clone());
    }
    for v in 1..=bound {
        let mut fixed = sys.to_vec();
        let mut pin = vec![0; n];
        pin[k] = 1;
        fixed.push(Constraint::new(pin, -v, Rel::Eq));
        if !fourier_motzkin::feasible(&fixed) {
            continue;
        }
        prefix.push(v);
        if let Some(w) = search(&fixed, base, n, bound, prefix) {
            return Some(w);
        }
        prefix.pop();
    }
    None
}

/// First violation found by [`verify_degree_laws`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreeLawReport {
    Pass,
    /// `d(a^α a^β) ≠ d(a^α) + d(a^β)` although the product is nonzero.
    Additivity { factors: [Monomial; 2], product_degree: u64, expected: u64 },
    /// `d(a^β) ≥ d(LH(a^α a^β a^η))` with the leading part not `a^β`.
    MiddleFactor { factors: [Monomial; 3], middle_degree: u64, leading_degree: u64 },
    /// `d(a^α) < d(a^β)` but `d(a^γ a^α a^η) ≥ d(a^γ a^β a^η)`.
    Monotonicity { lower: Monomial, higher: Monomial, left: Monomial, right: Monomial },
}

impl DegreeLawReport {
    pub fn passed(&self) -> bool {
        matches!(self, DegreeLawReport::Pass)
    }
}

struct TripleInfo {
    // Degree and leading homogeneous part of a^α a^β a^η, None when zero.
    degree: Option<u64>,
    leading: Option<Polynomial>,
}

/// Exhaustively check, over every monomial with exponents in `[0, bound]`,
/// that degrees add under multiplication, that a middle factor never
/// reaches the degree of the product's leading part, and that
/// multiplying on both sides preserves strict degree inequalities.
pub fn verify_degree_laws(pres: &AlgebraPresentation, d: &DegreeFunction, bound: u32) -> Result<DegreeLawReport> {
    verify_degree_laws_with(pres, d, bound, Exec::default())
}

pub fn verify_degree_laws_with(
    pres: &AlgebraPresentation,
    d: &DegreeFunction,
    bound: u32,
    exec: Exec,
) -> Result<DegreeLawReport> {
    check_dims(pres, d)?;
    let all = Monomial::enumerate_box(pres.nvars(), bound);
    let size = all.len();
    let degs = all.iter().map(|m| d.deg_monomial(m)).collect::<Result<Vec<_>>>()?;

    let additivity = par::find_map_first(exec, &all, || Multiplier::new(pres), |mult, a| {
        let run = |mult: &mut Multiplier<'_>| -> Result<Option<DegreeLawReport>> {
            for b in &all {
                let prod = mult.mul_monomials_shared(a, b)?;
                if prod.is_zero() {
                    continue;
                }
                let got = d.deg_poly(&prod)?;
                let expected = d.deg_monomial(a)? + d.deg_monomial(b)?;
                if got != expected {
                    return Ok(Some(DegreeLawReport::Additivity {
                        factors: [a.clone(), b.clone()],
                        product_degree: got,
                        expected,
                    }));
                }
            }
            Ok(None)
        };
        run(mult).transpose()
    });
    if let Some(hit) = additivity.transpose()? {
        return Ok(hit);
    }

    // triples[(x*size + y)*size + z] describes a^x a^y a^z
    let rows: Vec<Result<Vec<TripleInfo>>> = par::map_collect(exec, &all, || Multiplier::new(pres), |mult, x| {
        let mut row = Vec::with_capacity(size * size);
        for y in &all {
            let xy = mult.mul_monomials_shared(x, y)?;
            for z in &all {
                let prod = mult.mul_poly_monomial(&xy, z)?;
                if prod.is_zero() {
                    row.push(TripleInfo { degree: None, leading: None });
                } else {
                    row.push(TripleInfo { degree: Some(d.deg_poly(&prod)?), leading: Some(d.leading_homogeneous(&prod)?) });
                }
            }
        }
        Ok(row)
    });
    let mut triples = Vec::with_capacity(size * size * size);
    for r in rows {
        triples.extend(r?);
    }
    let at = |x: usize, y: usize, z: usize| &triples[(x * size + y) * size + z];
    let is_nonconstant = |t: &TripleInfo| t.degree.is_some_and(|g| g > 0);

    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                let t = at(x, y, z);
                if !is_nonconstant(t) {
                    continue;
                }
                let lead = t.leading.as_ref().expect("nonzero product has a leading part");
                let middle = pres.monomial(all[y].clone());
                let top = t.degree.expect("nonzero");
                if *lead != middle && degs[y] >= top {
                    return Ok(DegreeLawReport::MiddleFactor {
                        factors: [all[x].clone(), all[y].clone(), all[z].clone()],
                        middle_degree: degs[y],
                        leading_degree: top,
                    });
                }
            }
        }
    }

    for g in 0..size {
        for h in 0..size {
            for lo in 0..size {
                let Some(dl) = at(g, lo, h).degree else { continue };
                for hi in 0..size {
                    if degs[lo] >= degs[hi] {
                        continue;
                    }
                    let t = at(g, hi, h);
                    if !is_nonconstant(t) {
                        continue;
                    }
                    if dl >= t.degree.expect("nonzero") {
                        return Ok(DegreeLawReport::Monotonicity {
                            lower: all[lo].clone(),
                            higher: all[hi].clone(),
                            left: all[g].clone(),
                            right: all[h].clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(DegreeLawReport::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q(n: i64) -> crate::Scalar {
        Field::Rational.from_i64(n)
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn single_relation(n: usize, i: usize, j: usize, tail: &[&[u32]]) -> AlgebraPresentation {
        let mut p = AlgebraPresentation::commutative(n, Field::Rational);
        let t = Polynomial::from_terms(n, tail.iter().map(|e| (m(e), q(1)))).unwrap();
        p.set_relation(i, j, q(1), t).unwrap();
        p
    }

    fn d(w: &[i64]) -> DegreeFunction {
        DegreeFunction::new(w.to_vec()).unwrap()
    }

    #[test]
    fn commutative_is_graded_for_any_weights() {
        let p = AlgebraPresentation::commutative(3, Field::Rational);
        for w in [[1, 1, 1], [5, 2, 7]] {
            let r = check_graded_type(&p, &d(&w)).unwrap();
            assert_eq!(r.verdict, TypeVerdict::Graded);
            assert!(r.witnesses.is_empty());
        }
    }

    #[test]
    fn degree_mismatch_between_weights_and_presentation() {
        let p = AlgebraPresentation::commutative(3, Field::Rational);
        assert!(check_graded_type(&p, &d(&[1, 1])).is_err());
    }

    #[test]
    fn weights_for_single_relation() {
        // a2 a1 = a1 a2 + a1^3 forces m2 = 2 m1.
        let p = single_relation(2, 0, 1, &[&[3, 0]]);
        assert_eq!(find_weights(&p, WeightMode::Graded, 16), Some(d(&[1, 2])));
        // a2 a1 = a1 a2 + a2^3 forces m1 = 2 m2.
        let p = single_relation(2, 0, 1, &[&[0, 3]]);
        assert_eq!(find_weights(&p, WeightMode::Graded, 16), Some(d(&[2, 1])));
    }

    #[test]
    fn weights_for_commutative_ring() {
        let p = AlgebraPresentation::commutative(3, Field::Rational);
        assert_eq!(find_weights(&p, WeightMode::Graded, 1), Some(d(&[1, 1, 1])));
    }

    #[test]
    fn infeasible_weight_systems() {
        // a2 a1 = a1 a2 + 1 can never be graded: 0 = m1 + m2.
        let p = single_relation(2, 0, 1, &[&[0, 0]]);
        assert_eq!(find_weights(&p, WeightMode::Graded, 16), None);
        assert_eq!(find_weights(&p, WeightMode::Filtered, 1), Some(d(&[1, 1])));
        // a2 a1 = a1 a2 + a1^2 a2 + a1 a2^2: needs m1 = 0 and m2 = 0.
        let p = single_relation(2, 0, 1, &[&[2, 1], &[1, 2]]);
        assert_eq!(find_weights(&p, WeightMode::Filtered, 16), None);
    }

    #[test]
    fn bound_is_respected() {
        let p = single_relation(2, 0, 1, &[&[3, 0]]);
        assert_eq!(find_weights(&p, WeightMode::Graded, 1), None);
    }

    #[test]
    fn degree_laws_commutative() {
        let p = AlgebraPresentation::commutative(2, Field::Rational);
        assert_eq!(verify_degree_laws(&p, &d(&[1, 1]), 3).unwrap(), DegreeLawReport::Pass);
    }

    #[test]
    fn degree_laws_catch_corruption() {
        let p = single_relation(2, 0, 1, &[&[0, 5]]);
        let r = verify_degree_laws(&p, &d(&[1, 1]), 2).unwrap();
        assert!(matches!(r, DegreeLawReport::Additivity { .. }), "{r:?}");
    }
}
