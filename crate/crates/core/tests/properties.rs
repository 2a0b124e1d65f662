use proptest::prelude::*;

use shakin::distraction::{polarize, DistractionMatrix};
use shakin::groebner::{Ideal, PrimeField};
use shakin::homology::{koszul_betti, local_coh_monomial, monomial_betti, taylor_betti_oracle};
use shakin::macaulay::{is_o_sequence, lex_ideal_for_hf};
use shakin::monomials::{Monomial, MonomialIdeal, MonomialOrder};
use shakin::shakin::{is_lex_segment, ShakinIdeal};
use shakin::verify::{case_rng, enumerate_monomial_ideals_modulo, DEFAULT_BUDGET};

fn ideal_in(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_map(move |gens| {
        let gens = gens
            .into_iter()
            .map(|mut e| {
                if e.iter().all(|&x| x == 0) {
                    e[0] = 1;
                }
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::new(n, gens).unwrap()
    })
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| ideal_in(n, 3, 4))
}

fn field() -> PrimeField {
    PrimeField::default()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn hilbert_functions_are_o_sequences_and_lexify(i in ideal()) {
        let h = i.hilbert_function(7);
        prop_assert!(is_o_sequence(&h, i.n()));
        let l = lex_ideal_for_hf(i.n(), &h).unwrap();
        prop_assert!(is_lex_segment(&l));
        prop_assert_eq!(l.hilbert_function(7), h);
    }

    #[test]
    fn betti_euler_characteristic_is_the_numerator(i in ideal()) {
        let t = monomial_betti(&i, 10, &field());
        let num = i.hilbert_numerator();
        for j in 0..=10u32 {
            prop_assert_eq!(t.euler_characteristic(j), num.get(j as usize).copied().unwrap_or(0));
        }
    }

    #[test]
    fn multigraded_koszul_matches_taylor(i in ideal()) {
        prop_assert_eq!(monomial_betti(&i, 10, &field()), taylor_betti_oracle(&i, 10, &field()));
    }

    #[test]
    fn distraction_preserves_hilbert_function_and_betti(i in ideal_in(3, 3, 3), seed in any::<u64>()) {
        let d = DistractionMatrix::random(3, 3, field(), &mut case_rng(seed, 0));
        let j = d.distract_ideal(&i).unwrap();
        prop_assert_eq!(j.hilbert_function(8), i.hilbert_function(8));
        prop_assert_eq!(koszul_betti(&j, 10).entries, monomial_betti(&i, 10, &field()).entries);
    }

    #[test]
    fn generators_reduce_to_zero(i in ideal_in(3, 3, 3), seed in any::<u64>()) {
        let d = DistractionMatrix::random(3, 2, field(), &mut case_rng(seed, 1));
        let j = d.distract_ideal(&i).unwrap();
        for g in j.gens() {
            prop_assert!(j.normal_form(g).is_zero());
        }
        let lex = j.initial_ideal(&MonomialOrder::Lex);
        prop_assert_eq!(lex.hilbert_function(8), j.hilbert_function(8));
    }

    #[test]
    fn h0_by_saturation_matches_degree_complex(i in ideal_in(2, 3, 3)) {
        let h0 = Ideal::from_monomial_ideal(&i, field()).h0_hilbert_function(6);
        let t = local_coh_monomial(&i, (0, 0), (0, 6), &field()).unwrap();
        for j in 0..=6 {
            prop_assert_eq!(h0.get(j), t.get(0, j as i64));
        }
    }

    #[test]
    fn polarization_is_squarefree_with_the_same_betti_numbers(i in ideal_in(2, 3, 3)) {
        let p = polarize(&i);
        prop_assert!(p.polarized.gens().iter().all(|g| g.exponents().iter().all(|&e| e <= 1)));
        prop_assert_eq!(p.specialize_x(), i.clone());
        let bp = monomial_betti(&p.polarized, 8, &field());
        prop_assert_eq!(bp.entries, monomial_betti(&i, 8, &field()).entries);
    }

    #[test]
    fn shakin_embedding_preserves_hilbert_function(extra in ideal_in(3, 3, 3), d1 in 2u32..4, d2 in 0u32..2) {
        let a = ShakinIdeal::pure_powers(3, vec![d1, d1 + d2]).unwrap();
        let i = extra.sum(a.total());
        let l = a.embed_ideal(&i, 6).unwrap();
        prop_assert!(a.total().is_subset_of(&l));
        prop_assert_eq!(l.hilbert_function(6), i.hilbert_function(6));
    }

    #[test]
    fn json_round_trips(i in ideal(), seed in any::<u64>()) {
        let text = serde_json::to_string(&i).unwrap();
        prop_assert_eq!(serde_json::from_str::<MonomialIdeal>(&text).unwrap(), i.clone());
        let d = DistractionMatrix::random(i.n(), 2, field(), &mut case_rng(seed, 2));
        let text = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<DistractionMatrix>(&text).unwrap(), d.clone());
        let j = d.distract_ideal(&i).unwrap();
        let text = serde_json::to_string(&j).unwrap();
        prop_assert_eq!(serde_json::from_str::<Ideal>(&text).unwrap(), j);
    }
}

#[test]
fn enumeration_is_sorted_unique_and_closed() {
    let a = MonomialIdeal::from_exponents(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]).unwrap();
    let all = enumerate_monomial_ideals_modulo(&a, 4, DEFAULT_BUDGET).unwrap();
    assert!(all.windows(2).all(|w| w[0] < w[1]));
    assert!(all.iter().all(|i| a.is_subset_of(i)));
    assert!(all.contains(&a) && all.contains(&MonomialIdeal::unit(3)));
}
