//! Random elements for sampled property checks.

use rand::Rng;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Scalar {
    loop {
        let num: i64 = rng.gen_range(-5..=5);
        let den: i64 = rng.gen_range(1..=3);
        if let Ok(c) = field.from_ratio(num.into(), den.into()) {
            if !c.is_zero() {
                return c;
            }
        }
    }
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, nvars: usize, max_exp: u32) -> Monomial {
    Monomial::new((0..nvars).map(|_| rng.gen_range(0..=max_exp)).collect())
}

/// A nonzero polynomial with between 1 and `max_terms` terms and every
/// exponent at most `max_exp`.
pub fn random_poly<R: Rng + ?Sized>(rng: &mut R, nvars: usize, field: Field, max_exp: u32, max_terms: usize) -> Polynomial {
    loop {
        let count = rng.gen_range(1..=max_terms.max(1));
        let mut p = Polynomial::zero(nvars);
        for _ in 0..count {
            p.add_term(random_monomial(rng, nvars, max_exp), random_scalar(rng, field));
        }
        if !p.is_zero() {
            return p;
        }
    }
}
