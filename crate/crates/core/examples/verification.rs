//! The verification harness: exhaustive and sampled checks with JSON
//! reports that replay from their recorded parameters.

use shakin::distraction::DistractionMatrix;
use shakin::groebner::PrimeField;
use shakin::monomials::MonomialIdeal;
use shakin::shakin::{PiecewiseLexIdeal, ShakinIdeal};
use shakin::verify::{
    case_rng, verify_betti_extremal, verify_codistra_h0, verify_coh_extremal, verify_epsilon_d_extremal,
    verify_macaulay_lex, BaseRing, SampleSpec, DEFAULT_BUDGET, DEFAULT_SEED,
};

fn main() {
    let f = PrimeField::default();
    let lex = PiecewiseLexIdeal::new(3, vec![(1, MonomialIdeal::from_exponents(1, &[&[2]]).unwrap())]).unwrap();
    let a = ShakinIdeal::new(lex, vec![]).unwrap();
    let base = BaseRing::Shakin(a.clone());

    let r = verify_macaulay_lex(&base, 3, DEFAULT_BUDGET).unwrap();
    println!("{}: passed={} cases={}", r.theorem, r.passed, r.cases_checked);
    let r = verify_betti_extremal(&base, 3, 5, f, DEFAULT_BUDGET).unwrap();
    println!("{}: passed={} cases={}", r.theorem, r.passed, r.cases_checked);
    let r = verify_coh_extremal(&base, 3, (-6, 4), f, DEFAULT_BUDGET).unwrap();
    println!("{}: passed={} cases={}", r.theorem, r.passed, r.cases_checked);

    let spec = SampleSpec { n: 3, samples: 20, max_gens: 3, max_degree: 3, dmax: 5, seed: DEFAULT_SEED };
    let r = verify_codistra_h0(&spec, f);
    println!("{}: passed={} not attempted={:?}", r.theorem, r.passed, r.not_attempted);

    let d = DistractionMatrix::random(3, 3, f, &mut case_rng(DEFAULT_SEED, 0));
    let r = verify_epsilon_d_extremal(&a, &d, 3, 10, DEFAULT_SEED, DEFAULT_BUDGET).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());

    // an unchecked base that is not Macaulay-lex produces replayable failures
    let r = verify_macaulay_lex(&BaseRing::Unchecked(MonomialIdeal::from_exponents(2, &[&[0, 2]]).unwrap()), 3, DEFAULT_BUDGET).unwrap();
    println!("A/(x2^2): passed={}, first failure {}", r.passed, r.failures[0]);
}
