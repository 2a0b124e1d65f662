//! Hilbert functions, Hilbert numerators and the (1-z)^r series transform of
//! monomial quotients.

use shakin::monomials::{series_transform, MonomialIdeal};

fn main() {
    let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 0, 3]]).unwrap();
    println!("I = {i}");
    let h = i.hilbert_function(8);
    println!("HF(A/I) up to degree 8: {:?}", h.values());
    println!("Hilbert numerator: {:?}", i.hilbert_numerator());

    // dividing by (1-z) adds a free variable
    let shifted = series_transform(&h, -1);
    println!("HF(A/I)/(1-z): {:?}", shifted.coeffs());
    println!("standard monomials in degree 2:");
    for m in i.standard_monomials(2) {
        println!("  {m}");
    }
}
