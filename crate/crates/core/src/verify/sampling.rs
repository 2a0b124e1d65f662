//! Seeded random samplers. Every case draws from its own ChaCha stream, so
//! results do not depend on how cases are scheduled across threads.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::groebner::{Polynomial, PrimeField};
use crate::monomials::{monomials_of_degree, Monomial, MonomialIdeal};

/// Fixed seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// The random stream for case `index` of a run seeded with `seed`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_monomial<R: Rng>(n: usize, degree: u32, rng: &mut R) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..degree {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::new(e)
}

/// A monomial ideal with `1..=max_gens` random generators of degrees
/// `1..=max_degree`.
pub fn random_monomial_ideal<R: Rng>(n: usize, max_gens: usize, max_degree: u32, rng: &mut R) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..k).map(|_| {
        let d = rng.gen_range(1..=max_degree.max(1));
        random_monomial(n, d, rng)
    });
    MonomialIdeal::new(n, gens.collect()).expect("generators have the right length")
}

/// A random form of degree `d` with at most `terms` terms and nonzero
/// coefficients.
pub fn random_form<R: Rng>(n: usize, d: u32, terms: usize, field: &PrimeField, rng: &mut R) -> Polynomial {
    let all = monomials_of_degree(n, d);
    let picked = (0..terms.max(1)).map(|_| {
        let m = all[rng.gen_range(0..all.len())].clone();
        (m, rng.gen_range(1..field.characteristic()) as i64)
    });
    Polynomial::from_terms(n, picked.collect::<Vec<_>>(), field)
}
