//! Buchberger's algorithm over a prime field: bases, normal forms,
//! initial ideals and ideal membership.

use shakin::groebner::{Ideal, PrimeField};
use shakin::monomials::MonomialOrder;

fn main() {
    let f = PrimeField::default();
    let i = Ideal::parse(3, f, &["x1^2 - x2*x3", "x1*x2 - x3^2", "x2^2 - x1*x3"]).unwrap();
    for (name, order) in [("lex", MonomialOrder::Lex), ("degrevlex", MonomialOrder::DegRevLex)] {
        println!("{name} basis:");
        for g in i.groebner_basis(&order) {
            println!("  {}", g.display(&f));
        }
        println!("  initial ideal {}", i.initial_ideal(&order));
    }
    println!("HF: {:?}", i.hilbert_function(6).values());
    let g = shakin::groebner::Polynomial::parse("x1^3 - x3^3", 3, &f).unwrap();
    println!("x1^3 - x3^3 in I? {}", i.contains(&g));

    let small = PrimeField::new(5).unwrap();
    let j = Ideal::parse(2, small, &["x1^2 + 3*x1*x2", "x2^3"]).unwrap();
    println!("over F_5: {:?}", j.basis().iter().map(|p| p.display(&small)).collect::<Vec<_>>());
}
