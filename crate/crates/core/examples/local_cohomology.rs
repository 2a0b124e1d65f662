//! Local cohomology Hilbert functions of monomial quotients from degree
//! complexes.

use shakin::groebner::PrimeField;
use shakin::homology::{default_window, local_coh_monomial};
use shakin::monomials::MonomialIdeal;

fn main() {
    let f = PrimeField::default();
    for gens in [&[&[1u32, 1][..]][..], &[&[2, 0], &[1, 1]], &[&[2, 0], &[0, 2]]] {
        let i = MonomialIdeal::from_exponents(2, gens).unwrap();
        let window = default_window(&i, 4);
        let t = local_coh_monomial(&i, (0, 2), window, &f).unwrap();
        println!("A/{i}, support bound {:?}:\n{}", t.support_bound, t.render());
    }
}
