//! Rational feasibility of small linear systems by Fourier-Motzkin
//! elimination. Equalities are eliminated by substitution before any
//! inequality is combined.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `Σ c_k x_k + c_0 ≤ 0`
    Le,
    /// `Σ c_k x_k + c_0 = 0`
    Eq,
}

/// A linear constraint with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub constant: BigRational,
    pub rel: Relation,
}

impl Constraint {
    pub fn new(coeffs: Vec<i64>, constant: i64, rel: Relation) -> Self {
        Constraint {
            coeffs: coeffs.into_iter().map(|c| BigRational::from_integer(c.into())).collect(),
            constant: BigRational::from_integer(constant.into()),
            rel,
        }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn holds_trivially(&self) -> bool {
        match self.rel {
            Relation::Le => !self.constant.is_positive(),
            Relation::Eq => self.constant.is_zero(),
        }
    }

    /// Scale to primitive integer coefficients so duplicates collapse.
    fn normalized(mut self) -> Self {
        let lcm = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return self;
        }
        if self.rel == Relation::Eq {
            // Fix the sign so c·x = 0 and −c·x = 0 coincide.
            if let Some(first) = ints.iter().find(|c| !c.is_zero()) {
                if first.is_negative() {
                    g = -g;
                }
            }
        }
        let scaled: Vec<BigRational> = ints.into_iter().map(|c| BigRational::from_integer(c / &g)).collect();
        self.constant = scaled[scaled.len() - 1].clone();
        self.coeffs = scaled[..scaled.len() - 1].to_vec();
        self
    }
}

/// Does the system have a rational solution?
pub fn feasible(constraints: &[Constraint]) -> bool {
    let mut system: Vec<Constraint> = constraints.to_vec();
    let nvars = system.first().map_or(0, |c| c.coeffs.len());
    let mut live: Vec<usize> = (0..nvars).collect();
    loop {
        let mut next = Vec::with_capacity(system.len());
        let mut seen = HashSet::new();
        for c in system {
            if c.is_trivial() {
                if !c.holds_trivially() {
                    return false;
                }
                continue;
            }
            let c = c.normalized();
            if seen.insert(c.clone()) {
                next.push(c);
            }
        }
        system = next;
        if system.is_empty() {
            return true;
        }
        live.retain(|&v| system.iter().any(|c| !c.coeffs[v].is_zero()));
        if let Some((pos, v)) = system
            .iter()
            .enumerate()
            .filter(|(_, c)| c.rel == Relation::Eq)
            .find_map(|(k, c)| live.iter().find(|&&v| !c.coeffs[v].is_zero()).map(|&v| (k, v)))
        {
            let eq = system.swap_remove(pos);
            system = system.into_iter().map(|c| substitute(c, &eq, v)).collect();
            continue;
        }
        // Only inequalities remain: drop the variable with the fewest
        // generated pairs.
        let Some(&v) = live.iter().min_by_key(|&&v| {
            let p = system.iter().filter(|c| c.coeffs[v].is_positive()).count();
            let n = system.iter().filter(|c| c.coeffs[v].is_negative()).count();
            p * n
        }) else {
            return true;
        };
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in system {
            if c.coeffs[v].is_positive() {
                pos.push(c);
            } else if c.coeffs[v].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let a = p.coeffs[v].clone();
                let b = -q.coeffs[v].clone();
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                let constant = &p.constant * &b + &q.constant * &a;
                rest.push(Constraint { coeffs, constant, rel: Relation::Le });
            }
        }
        system = rest;
    }
}

// Eliminate `v` from `c` using the equality `eq`.
fn substitute(c: Constraint, eq: &Constraint, v: usize) -> Constraint {
    if c.coeffs[v].is_zero() {
        return c;
    }
    let factor = &c.coeffs[v] / &eq.coeffs[v];
    let coeffs = c.coeffs.iter().zip(&eq.coeffs).map(|(x, y)| x - &(&factor * y)).collect();
    let constant = &c.constant - &(&factor * &eq.constant);
    Constraint { coeffs, constant, rel: c.rel }
}
