#![allow(dead_code)]

use std::collections::BTreeMap;

use solvalg::{AlgebraPresentation, DegreeFunction, Field, Monomial, MonomialOrdering, Polynomial, Scalar};

pub fn q(n: i64) -> Scalar {
    Field::Rational.from_i64(n)
}

pub fn m(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn poly(terms: &[(i64, &[u32])]) -> Polynomial {
    let n = terms[0].1.len();
    Polynomial::from_terms(n, terms.iter().map(|(c, e)| (m(e), q(*c)))).unwrap()
}

/// a1 a2 = a2 a1, a3 a2 = a2 a3, a3 a1 = λ a1 a3 + μ a2² a3 + f(a2),
/// with f given as (coefficient, a2-exponent) pairs.
pub fn example_algebra(lambda: i64, mu: i64, f: &[(i64, u32)]) -> AlgebraPresentation {
    let mut p = AlgebraPresentation::commutative(3, Field::Rational);
    let mut tail = Polynomial::zero(3);
    tail.add_term(m(&[0, 2, 1]), q(mu));
    for &(c, e) in f {
        tail.add_term(m(&[0, e, 0]), q(c));
    }
    p.set_relation(0, 2, q(lambda), tail).unwrap();
    p
}

/// λ = μ = 1, f = a2^6: graded for weights (2,1,4).
pub fn graded_instance() -> AlgebraPresentation {
    example_algebra(1, 1, &[(1, 6)])
}

/// λ = μ = 1, f = a2^5: filtered but not graded for weights (2,1,4).
pub fn filtered_instance() -> AlgebraPresentation {
    example_algebra(1, 1, &[(1, 5)])
}

pub fn d214() -> DegreeFunction {
    DegreeFunction::new(vec![2, 1, 4]).unwrap()
}

/// Degree first, then lex with a3 ≺ a2 ≺ a1.
pub fn gr_order() -> MonomialOrdering {
    MonomialOrdering::make_graded(MonomialOrdering::lex_natural(3), d214()).unwrap()
}

/// Independent normal-form oracle: elements of the free algebra are maps
/// from words to coefficients; the leftmost descent `a_j a_i` (j > i) of
/// the first unsorted word is rewritten until every word is sorted.
pub struct WordRewriter<'a> {
    pub pres: &'a AlgebraPresentation,
    pub budget: u64,
}

pub type Element = BTreeMap<Vec<usize>, Scalar>;

fn add_to(e: &mut Element, w: Vec<usize>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let sum = match e.get(&w) {
        Some(old) => old + &c,
        None => c,
    };
    if sum.is_zero() {
        e.remove(&w);
    } else {
        e.insert(w, sum);
    }
}

pub fn word_of(mono: &Monomial) -> Vec<usize> {
    mono.exps().iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize)).collect()
}

pub fn element_of(f: &Polynomial) -> Element {
    let mut e = Element::new();
    for (mono, c) in f.terms() {
        add_to(&mut e, word_of(mono), c.clone());
    }
    e
}

impl WordRewriter<'_> {
    pub fn normalize(&self, mut e: Element) -> Option<Polynomial> {
        let mut steps = 0;
        loop {
            let found = e.iter().find_map(|(w, c)| {
                w.windows(2).position(|p| p[0] > p[1]).map(|k| (w.clone(), c.clone(), k))
            });
            let Some((w, c, k)) = found else { break };
            steps += 1;
            if steps > self.budget {
                return None;
            }
            e.remove(&w);
            let (j, i) = (w[k], w[k + 1]);
            let rel = self.pres.relation(i, j);
            let mut swapped = w.clone();
            swapped.swap(k, k + 1);
            add_to(&mut e, swapped, &c * &rel.lambda);
            for (mono, tc) in rel.tail.terms() {
                let mut nw = w[..k].to_vec();
                nw.extend(word_of(mono));
                nw.extend_from_slice(&w[k + 2..]);
                add_to(&mut e, nw, &c * tc);
            }
        }
        let n = self.pres.nvars();
        let mut out = Polynomial::zero(n);
        for (w, c) in e {
            let mut exps = vec![0u32; n];
            for g in w {
                exps[g] += 1;
            }
            out.add_term(Monomial::new(exps), c);
        }
        Some(out)
    }

    /// Normal form of the concatenation of the given PBW polynomials.
    pub fn product(&self, factors: &[&Polynomial]) -> Option<Polynomial> {
        let mut acc = Element::new();
        acc.insert(Vec::new(), self.pres.field().one());
        for f in factors {
            let mut next = Element::new();
            for (w1, c1) in &acc {
                for (w2, c2) in element_of(f) {
                    let mut w = w1.clone();
                    w.extend(w2);
                    add_to(&mut next, w, c1 * &c2);
                }
            }
            acc = next;
        }
        self.normalize(acc)
    }
}
