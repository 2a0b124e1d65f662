//! Macaulay representations, O-sequences and lex-segment ideals.

use shakin::macaulay::{first_o_sequence_failure, lex_ideal_for_hf, macaulay_bound, macaulay_rep};
use shakin::monomials::HilbertFunction;

fn main() {
    for (a, d) in [(5u64, 2u32), (13, 3), (20, 4)] {
        let rep = macaulay_rep(a, d);
        println!("{a} = {:?} in degree {d}; growth bound {}", rep.terms, macaulay_bound(a, d));
    }

    let h = HilbertFunction::new(vec![1, 3, 4, 4, 3, 2, 1, 0]);
    match first_o_sequence_failure(&h, 3) {
        None => println!("{:?} is an O-sequence in 3 variables", h.values()),
        Some(d) => println!("{:?} fails in degree {d}", h.values()),
    }
    let l = lex_ideal_for_hf(3, &h).unwrap();
    println!("lex ideal: {l}");
    println!("its Hilbert function: {:?}", l.hilbert_function(7).values());

    let bad = HilbertFunction::new(vec![1, 2, 4]);
    println!("{:?} -> {}", bad.values(), lex_ideal_for_hf(2, &bad).unwrap_err());
}
