//! Lex-embeddings in a ring defined by a piecewise-lex ideal plus pure powers.

use shakin::monomials::{HilbertFunction, MonomialIdeal};
use shakin::shakin::{PiecewiseLexIdeal, ShakinIdeal};

fn main() {
    let lex = PiecewiseLexIdeal::new(3, vec![(1, MonomialIdeal::from_exponents(1, &[&[2]]).unwrap())]).unwrap();
    let a = ShakinIdeal::new(lex, vec![2, 3]).unwrap();
    println!("a = {}", a.total());

    let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 1, 1], &[0, 0, 3]]).unwrap();
    let l = a.embed_ideal(&i, 6).unwrap();
    println!("I      = {i}");
    println!("eps(I) = {l}");
    println!("HF: {:?} vs {:?}", i.hilbert_function(6).values(), l.hilbert_function(6).values());

    let pure = ShakinIdeal::pure_powers(2, vec![2, 2]).unwrap();
    let h = HilbertFunction::new(vec![1, 1, 0]);
    println!("embedding of {:?} into A/{}: {}", h.values(), pure.total(), pure.lex_embed(&h, 2).unwrap());
    let too_big = HilbertFunction::new(vec![1, 2, 2]);
    println!("{:?} admissible? {}", too_big.values(), pure.is_admissible(&too_big, 2));
}
