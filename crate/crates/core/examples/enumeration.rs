//! Exhaustive enumeration of the monomial ideals containing a base ideal.

use shakin::monomials::MonomialIdeal;
use shakin::verify::{enumerate_monomial_ideals_modulo, DEFAULT_BUDGET};

fn main() {
    let a = MonomialIdeal::from_exponents(2, &[&[2, 0], &[0, 2]]).unwrap();
    let all = enumerate_monomial_ideals_modulo(&a, 3, DEFAULT_BUDGET).unwrap();
    println!("{} ideals contain {a} (generators of degree <= 3):", all.len());
    for i in &all {
        println!("  {i}  HF {:?}", i.hilbert_function(3).values());
    }
    let big = enumerate_monomial_ideals_modulo(&MonomialIdeal::zero(3), 4, 1000);
    println!("with a budget of 1000: {}", big.unwrap_err());
}
