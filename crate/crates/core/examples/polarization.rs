//! Polarization and its two specializations back to the original ring.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shakin::distraction::{polarize, DistractionMatrix};
use shakin::groebner::PrimeField;
use shakin::monomials::{series_transform, MonomialIdeal};

fn main() {
    let f = PrimeField::default();
    let i = MonomialIdeal::from_exponents(2, &[&[3, 0], &[1, 2]]).unwrap();
    let p = polarize(&i);
    println!("P({i}) = {} in {} variables {:?}", p.polarized, p.extended_n, p.variables);
    println!("X -> x specialization: {}", p.specialize_x());

    let d = DistractionMatrix::random(2, 3, f, &mut ChaCha8Rng::seed_from_u64(3));
    let l = p.specialize_l(&d).unwrap();
    println!("L specialization equals D(I): {}", l == d.distract_ideal(&i).unwrap());

    let lhs = p.polarized.hilbert_function(6);
    let rhs = series_transform(&i.hilbert_function(6), -(p.total_r() as i64));
    println!("HF(T/P(I)) = {:?}", lhs.values());
    println!("HF(A/I) / (1-z)^{} = {:?}", p.total_r(), rhs.coeffs());
}
