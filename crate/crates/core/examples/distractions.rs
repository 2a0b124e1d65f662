//! Distraction matrices: validation, images of monomial ideals, and the
//! normalisation used to induce a distraction in one variable fewer.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shakin::distraction::{DistractionMatrix, LinearForm};
use shakin::groebner::PrimeField;
use shakin::monomials::MonomialIdeal;

fn main() {
    let f = PrimeField::default();
    let rows = vec![
        vec![LinearForm::new(vec![1, 0]).unwrap(), LinearForm::new(vec![1, 1]).unwrap()],
        vec![LinearForm::new(vec![0, 1]).unwrap()],
    ];
    let d = DistractionMatrix::new_validated(2, f, rows).unwrap();
    println!("D = {}", serde_json::to_string(&d).unwrap());

    let i = MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1]]).unwrap();
    let j = d.distract_ideal(&i).unwrap();
    println!("D({i}) = {:?}", j.gens().iter().map(|g| g.display(&f)).collect::<Vec<_>>());
    println!("HF preserved: {:?} = {:?}", i.hilbert_function(5).values(), j.hilbert_function(5).values());

    let bad = DistractionMatrix::new(2, f, vec![vec![LinearForm::var(2, 1)], vec![LinearForm::var(2, 1)]]).unwrap();
    println!("rows picking x2 twice: {:?}", bad.validate());

    let r = DistractionMatrix::random(3, 3, f, &mut ChaCha8Rng::seed_from_u64(7));
    let (g, normalized) = r.normalize_last().unwrap();
    println!("change of coordinates: {:?}", g.matrix());
    println!("induced on two variables: {}", serde_json::to_string(&normalized.induce_bar().unwrap()).unwrap());
}
