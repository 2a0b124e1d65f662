//! Graded Betti numbers: the multigraded fast path, the general Koszul
//! computation and the Taylor-complex oracle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shakin::distraction::DistractionMatrix;
use shakin::groebner::PrimeField;
use shakin::homology::{koszul_betti, monomial_betti, taylor_betti_oracle};
use shakin::monomials::MonomialIdeal;

fn main() {
    let f = PrimeField::default();
    let i = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 1], &[0, 0, 3]]).unwrap();
    let t = monomial_betti(&i, 10, &f);
    println!("Betti table of A/{i}:\n{}", t.render());
    println!("Taylor oracle agrees: {}", t == taylor_betti_oracle(&i, 10, &f));

    let d = DistractionMatrix::random(3, 3, f, &mut ChaCha8Rng::seed_from_u64(11));
    let j = d.distract_ideal(&i).unwrap();
    let tj = koszul_betti(&j, 10);
    println!("after a distraction:\n{}", tj.render());
    println!("same numbers: {}", tj.entries == t.entries);
    println!("as JSON: {}", serde_json::to_string(&t).unwrap());
}
