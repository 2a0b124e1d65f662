//! Colon ideals by powers of a variable, saturation, intersection and the
//! Hilbert function of H^0 for a non-monomial ideal.

use shakin::groebner::{Ideal, PrimeField};

fn main() {
    let f = PrimeField::default();
    // (x1^2, x1*x2) after x1 -> x1 + x2: an embedded point in degree 1
    let i = Ideal::parse(2, f, &["x1^2 + 2*x1*x2 + x2^2", "x1*x2 + x2^2"]).unwrap();
    println!("I : x2       = {:?}", i.quotient_by_variable_power(1, 1).basis().iter().map(|g| g.display(&f)).collect::<Vec<_>>());
    println!("I : x2^inf   = {:?}", i.saturate_variable(1).basis().iter().map(|g| g.display(&f)).collect::<Vec<_>>());
    let sat = i.saturate();
    println!("I : m^inf    = {:?}", sat.basis().iter().map(|g| g.display(&f)).collect::<Vec<_>>());
    println!("HF(H^0(A/I)) = {:?}", i.h0_hilbert_function(6).values());

    let a = Ideal::parse(2, f, &["x1 + x2"]).unwrap();
    let b = Ideal::parse(2, f, &["x1^2", "x2^2"]).unwrap();
    println!("(x1+x2) ∩ (x1^2,x2^2) = {:?}", a.intersection(&b).basis().iter().map(|g| g.display(&f)).collect::<Vec<_>>());
}
