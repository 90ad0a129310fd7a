//! The associated graded algebra G(A), the Rees algebra Ã, and the element
//! maps between A, G(A) and Ã.
//!
//! G(A) has generators `σ(a_i)` (named `s_<name>`), Ã has generators
//! `ã_i` (named `<name>~`) followed by the central element `Z`. All three
//! share exponent-vector coordinates, Ã with one extra trailing coordinate
//! for `Z`, so the element maps are coordinate operations.

use crate::degree::DegreeFunction;
use crate::error::{AlgebraError, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::presentation::AlgebraPresentation;
use crate::verify::{check_filtered_type, TypeVerdict};

/// G(A) as a presentation, with the ordering and degree it inherits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTransform {
    pub presentation: AlgebraPresentation,
    pub ordering: MonomialOrdering,
    pub degree: DegreeFunction,
}

/// Ã as a presentation on `n + 1` generators, `Z` last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesTransform {
    pub presentation: AlgebraPresentation,
    pub ordering: MonomialOrdering,
    pub degree: DegreeFunction,
}

pub fn sigma_name(name: &str) -> String {
    format!("s_{name}")
}

pub fn rees_name(name: &str) -> String {
    format!("{name}~")
}

pub const REES_CENTRAL: &str = "Z";

fn graded_structurally(ord: &MonomialOrdering, d: &DegreeFunction) -> bool {
    match ord {
        MonomialOrdering::Graded { degree, .. } => degree == d,
        MonomialOrdering::Grlex { weights, .. } | MonomialOrdering::Grevlex { weights, .. } => weights == d,
        _ => false,
    }
}

fn check_preconditions(pres: &AlgebraPresentation, d: &DegreeFunction, ord: &MonomialOrdering) -> Result<()> {
    let report = check_filtered_type(pres, d)?;
    if report.verdict == TypeVerdict::Neither {
        let w = &report.witnesses[0];
        return Err(AlgebraError::NotFiltered { i: w.i, j: w.j, term: w.term.clone(), degree: w.degree, bound: w.required });
    }
    if ord.nvars() != pres.nvars() {
        return Err(AlgebraError::DimensionMismatch { expected: pres.nvars(), found: ord.nvars() });
    }
    if !graded_structurally(ord, d) && !ord.is_graded_wrt(d, 3)?.passed() {
        return Err(AlgebraError::OrderingNotGraded);
    }
    Ok(())
}

/// G(A): each relation keeps `λ_ji` and only the tail terms of degree
/// exactly `m_i + m_j`.
pub fn build_assoc_graded(pres: &AlgebraPresentation, d: &DegreeFunction, ord: &MonomialOrdering) -> Result<GradedTransform> {
    check_preconditions(pres, d, ord)?;
    let names = pres.names().iter().map(|s| sigma_name(s)).collect();
    let mut out = AlgebraPresentation::new(names, pres.field())?;
    for (i, j, rel) in pres.relations() {
        if rel.is_commuting() {
            continue;
        }
        let required = d.weights()[i] + d.weights()[j];
        let top = rel.tail.filter_terms(|m| d.deg_monomial(m) == Ok(required));
        out.set_relation(i, j, rel.lambda.clone(), top)?;
    }
    Ok(GradedTransform { presentation: out, ordering: ord.clone(), degree: d.clone() })
}

/// Ã: each tail term `a^α` becomes `ã^α Z^{m_i + m_j − d(a^α)}`; `Z` is
/// central and ordered by the Rees extension of `ord`.
pub fn build_rees(pres: &AlgebraPresentation, d: &DegreeFunction, ord: &MonomialOrdering) -> Result<ReesTransform> {
    check_preconditions(pres, d, ord)?;
    let n = pres.nvars();
    let mut names: Vec<String> = pres.names().iter().map(|s| rees_name(s)).collect();
    names.push(REES_CENTRAL.to_string());
    let mut out = AlgebraPresentation::new(names, pres.field())?;
    for (i, j, rel) in pres.relations() {
        if rel.is_commuting() {
            continue;
        }
        let required = d.weights()[i] + d.weights()[j];
        let mut tail = Polynomial::zero(n + 1);
        for (m, c) in rel.tail.terms() {
            let gap = required - d.deg_monomial(m)?;
            tail.add_term(m.extended(z_exponent(gap)?), c.clone());
        }
        out.set_relation(i, j, rel.lambda.clone(), tail)?;
    }
    Ok(ReesTransform {
        presentation: out,
        ordering: MonomialOrdering::rees_extension(ord.clone()),
        degree: d.extended(1)?,
    })
}

fn z_exponent(gap: u64) -> Result<u32> {
    u32::try_from(gap).map_err(|_| AlgebraError::DegreeOverflow)
}

/// Principal symbol `σ(f)`: the leading homogeneous part of `f`, read in
/// G(A)'s coordinates.
pub fn sigma(f: &Polynomial, d: &DegreeFunction) -> Result<Polynomial> {
    d.leading_homogeneous(f)
}

/// Homogenization `~f`: with `p = d(f)`, each term `a^α` becomes
/// `ã^α Z^{p − d(a^α)}`.
pub fn homogenize(f: &Polynomial, d: &DegreeFunction) -> Result<Polynomial> {
    let p = d.deg_poly(f)?;
    homogenize_at(f, d, p)
}

/// `h_p(f) = Z^{p − d(f)} ~f`, defined for `p ≥ d(f)`.
pub fn homogenize_to_level(f: &Polynomial, d: &DegreeFunction, p: u64) -> Result<Polynomial> {
    let degree = d.deg_poly(f)?;
    if p < degree {
        return Err(AlgebraError::LevelTooLow { level: p, degree });
    }
    homogenize_at(f, d, p)
}

fn homogenize_at(f: &Polynomial, d: &DegreeFunction, p: u64) -> Result<Polynomial> {
    let mut out = Polynomial::zero(f.nvars() + 1);
    for (m, c) in f.terms() {
        let gap = p - d.deg_monomial(m)?;
        out.add_term(m.extended(z_exponent(gap)?), c.clone());
    }
    Ok(out)
}

/// The Rees-side monomial `~(a^α) = ã^α`.
pub fn homogenize_monomial(m: &Monomial) -> Monomial {
    m.extended(0)
}

fn drop_z(m: &Monomial) -> Monomial {
    Monomial::new(m.exps()[..m.nvars() - 1].to_vec())
}

/// `ψ`: substitute `Z = 1`.
pub fn dehomogenize(h: &Polynomial) -> Polynomial {
    h.map_monomials(h.nvars() - 1, drop_z)
}

/// `φ`: reduce modulo `Z`, landing in G(A).
pub fn project_mod_z(h: &Polynomial) -> Polynomial {
    let n = h.nvars() - 1;
    h.filter_terms(|m| m.exps()[n] == 0).map_monomials(n, drop_z)
}

/// An equation of the symbol/homogenization laws that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma44Violation {
    SigmaDegree { degree: u64, sigma_degree: u64 },
    HomogenizedDegree { degree: u64, homogenized_degree: u64 },
    NotHomogeneous,
    SigmaLeading { expected: Monomial, found: Monomial },
    HomogenizedLeading { expected: Monomial, found: Monomial },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma44Report {
    Pass { degree: u64, leading: Monomial },
    Fail(Lemma44Violation),
}

impl Lemma44Report {
    pub fn passed(&self) -> bool {
        matches!(self, Lemma44Report::Pass { .. })
    }
}

/// Check `d(f) = d(σ(f)) = d(~f)`, that `~f` is homogeneous, and that both
/// maps commute with taking leading monomials.
pub fn lemma44_check(
    graded: &GradedTransform,
    rees: &ReesTransform,
    d: &DegreeFunction,
    ord: &MonomialOrdering,
    f: &Polynomial,
) -> Result<Lemma44Report> {
    let p = d.deg_poly(f)?;
    let lm = ord.leading_monomial(f)?;
    let s = sigma(f, d)?;
    let h = homogenize(f, d)?;
    let sd = graded.degree.deg_poly(&s)?;
    if sd != p {
        return Ok(Lemma44Report::Fail(Lemma44Violation::SigmaDegree { degree: p, sigma_degree: sd }));
    }
    let hd = rees.degree.deg_poly(&h)?;
    if hd != p {
        return Ok(Lemma44Report::Fail(Lemma44Violation::HomogenizedDegree { degree: p, homogenized_degree: hd }));
    }
    if !rees.degree.is_homogeneous_of(&h, p)? {
        return Ok(Lemma44Report::Fail(Lemma44Violation::NotHomogeneous));
    }
    let slm = graded.ordering.leading_monomial(&s)?;
    if slm != lm {
        return Ok(Lemma44Report::Fail(Lemma44Violation::SigmaLeading { expected: lm, found: slm }));
    }
    let hlm = rees.ordering.leading_monomial(&h)?;
    let expected = homogenize_monomial(&lm);
    if hlm != expected {
        return Ok(Lemma44Report::Fail(Lemma44Violation::HomogenizedLeading { expected, found: hlm }));
    }
    Ok(Lemma44Report::Pass { degree: p, leading: lm })
}
