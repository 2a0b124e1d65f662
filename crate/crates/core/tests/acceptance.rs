//! Acceptance run: every criterion prints one PASS/FAIL line with its
//! runtime and budget. The process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::Rng;
use shakin::distraction::{polarize, DistractionMatrix};
use shakin::groebner::{Ideal, PrimeField};
use shakin::homology::{koszul_betti, local_coh_monomial, taylor_betti_oracle};
use shakin::macaulay::lex_ideal_for_hf;
use shakin::monomials::{series_transform, MonomialIdeal};
use shakin::shakin::{PiecewiseLexIdeal, ShakinIdeal};
use shakin::verify::{
    case_rng, enumerate_monomial_ideals_modulo, random_monomial_ideal, verify_betti_distraction_invariance,
    verify_betti_extremal, verify_codistra_h0, verify_distraction_hf, verify_macaulay_lex, BaseRing, SampleSpec,
    DEFAULT_BUDGET, DEFAULT_SEED,
};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

/// `L + (x1^d1, ...)` with `L` the extension of a lex ideal in `x1` only.
fn shakin_x1(n: usize, l_degree: Option<u32>, powers: Vec<u32>) -> ShakinIdeal {
    let pieces = l_degree.map(|d| (1, mono(1, &[&[d]]))).into_iter().collect();
    ShakinIdeal::new(PiecewiseLexIdeal::new(n, pieces).unwrap(), powers).unwrap()
}

fn field() -> PrimeField {
    PrimeField::default()
}

fn criterion_1() -> Verdict {
    let mut bad = 0;
    for k in 0..500 {
        let i = random_monomial_ideal(3, 5, 5, &mut case_rng(DEFAULT_SEED, k));
        let h = i.hilbert_function(6);
        match lex_ideal_for_hf(3, &h) {
            Ok(l) if l.hilbert_function(6) == h => {}
            _ => bad += 1,
        }
    }
    verdict(bad == 0, format!("500 ideals, {bad} mismatches"))
}

fn criterion_2() -> Verdict {
    let rings = [
        ("(x1^2)+(x1^2,x2^2,x3^3)", shakin_x1(3, Some(2), vec![2, 2, 3])),
        ("(x1^3) piecewise-lex", shakin_x1(3, Some(3), vec![])),
        ("(x1^2,x2^2,x3^2)", ShakinIdeal::pure_powers(3, vec![2, 2, 2]).unwrap()),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, a) in rings {
        let start = Instant::now();
        match verify_macaulay_lex(&BaseRing::Shakin(a), 4, DEFAULT_BUDGET) {
            Ok(r) => {
                let t = start.elapsed();
                ok &= r.passed && t < Duration::from_secs(60);
                parts.push(format!("{name}: {} ideals, {} failures, {:.1}s", r.cases_checked, r.failures.len(), t.as_secs_f64()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{name}: {e}"));
            }
        }
    }
    verdict(ok, parts.join("; "))
}

fn criterion_3() -> Verdict {
    let a = shakin_x1(3, Some(2), vec![]);
    match verify_betti_extremal(&BaseRing::Shakin(a), 4, 5, field(), DEFAULT_BUDGET) {
        Ok(r) => verdict(r.passed, format!("{} ideals, {} violations", r.cases_checked, r.failures.len())),
        Err(e) => verdict(false, e.to_string()),
    }
}

fn criterion_4() -> Verdict {
    let spec = SampleSpec { n: 3, samples: 100, max_gens: 4, max_degree: 4, dmax: 12, seed: DEFAULT_SEED };
    let r = verify_betti_distraction_invariance(&spec, field());
    verdict(r.passed, format!("{} pairs, {} unequal tables (degrees <= 12)", r.cases_checked, r.failures.len()))
}

fn criterion_5() -> Verdict {
    let mut bad = 0;
    for k in 0..200 {
        let mut rng = case_rng(DEFAULT_SEED ^ 5, k);
        let n = rng.gen_range(2..=4);
        let i = random_monomial_ideal(n, 4, 4, &mut rng);
        let d = DistractionMatrix::random(n, 4, field(), &mut rng);
        let j = d.distract_ideal(&i).unwrap();
        if j.hilbert_function(8) != i.hilbert_function(8) {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("200 pairs, {bad} mismatches"))
}

fn criterion_6() -> Verdict {
    // a = (x1^2) + (x1^3, x2^3) = (x1^2, x2^3)
    let a = shakin_x1(3, Some(2), vec![3, 3]);
    let d = DistractionMatrix::random(3, 4, field(), &mut case_rng(DEFAULT_SEED, 6));
    match verify_distraction_hf(&a, &d, 5, 100, DEFAULT_SEED, DEFAULT_BUDGET) {
        Ok(r) => verdict(r.passed, format!("{} sampled ideals, {} not admissible", r.cases_checked, r.failures.len())),
        Err(e) => verdict(false, e.to_string()),
    }
}

fn criterion_7() -> Verdict {
    let spec = SampleSpec { n: 3, samples: 100, max_gens: 4, max_degree: 4, dmax: 6, seed: DEFAULT_SEED };
    let r = verify_codistra_h0(&spec, field());
    verdict(r.passed, format!("{} pairs, {} violations", r.cases_checked, r.failures.len()))
}

fn criterion_8() -> Verdict {
    let f = field();
    let artinian = [
        mono(1, &[&[3]]),
        mono(2, &[&[2, 0], &[0, 2]]),
        mono(2, &[&[2, 0], &[1, 1], &[0, 3]]),
        mono(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
        MonomialIdeal::maximal_power(3, 3),
    ];
    let mut bad = Vec::new();
    for (k, i) in artinian.iter().enumerate() {
        let t = local_coh_monomial(i, (0, i.n()), (-4, 8), &f).unwrap();
        let h = i.hilbert_function(8);
        let h0_ok = (0..=8).all(|j| t.get(0, j) == h.get(j as usize)) && (-4..0).all(|j| t.get(0, j) == 0);
        let rest_ok = t.entries.keys().all(|(c, _)| *c == 0);
        if !(h0_ok && rest_ok) {
            bad.push(format!("artinian #{k}"));
        }
    }
    let y = local_coh_monomial(&mono(2, &[&[1, 0]]), (0, 2), (-8, 4), &f).unwrap();
    if !(-8..=4).all(|j| y.get(1, j) == u64::from(j <= -1)) {
        bad.push("K[y]".into());
    }
    let xy = local_coh_monomial(&mono(2, &[&[1, 1]]), (0, 2), (-8, 4), &f).unwrap();
    let expected = |j: i64| if j <= -1 { 2 } else if j == 0 { 1 } else { 0 };
    if !(-8..=4).all(|j| xy.get(1, j) == expected(j)) {
        bad.push("(xy)".into());
    }
    verdict(bad.is_empty(), if bad.is_empty() { "7 oracles matched".to_string() } else { format!("mismatch: {}", bad.join(", ")) })
}

fn criterion_9() -> Verdict {
    let f = field();
    let all = enumerate_monomial_ideals_modulo(&MonomialIdeal::zero(2), 4, DEFAULT_BUDGET).unwrap();
    let mut bad = 0;
    for i in &all {
        if koszul_betti(&Ideal::from_monomial_ideal(i, f), 8) != taylor_betti_oracle(i, 8, &f) {
            bad += 1;
        }
    }
    for k in 0..100 {
        let i = random_monomial_ideal(3, 5, 4, &mut case_rng(DEFAULT_SEED ^ 9, k));
        if koszul_betti(&Ideal::from_monomial_ideal(&i, f), 12) != taylor_betti_oracle(&i, 12, &f) {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("{} exhaustive n=2 ideals + 100 random n=3, {bad} mismatches", all.len()))
}

fn criterion_10() -> Verdict {
    let mut bad = 0;
    for k in 0..100 {
        let mut rng = case_rng(DEFAULT_SEED ^ 10, k);
        let n = rng.gen_range(2..=3);
        let i = random_monomial_ideal(n, 4, 4, &mut rng);
        let p = polarize(&i);
        let rhs = series_transform(&i.hilbert_function(6), -(p.total_r() as i64));
        if rhs.to_hilbert_function().as_ref() != Some(&p.polarized.hilbert_function(6)) {
            bad += 1;
        }
    }
    verdict(bad == 0, format!("100 ideals, {bad} mismatches"))
}

fn criterion_11() -> Verdict {
    // nonzero pure-power part: a = (x1^2) as a pure power
    let a = shakin_x1(3, None, vec![2]);
    let mut parts = Vec::new();
    let mut ok = true;
    for p in [2, 3, 5] {
        let f = PrimeField::new(p).unwrap();
        match verify_betti_extremal(&BaseRing::Shakin(a.clone()), 4, 5, f, DEFAULT_BUDGET) {
            Ok(r) => {
                // completion with every violation classified as a finding
                ok &= r.failures.is_empty();
                parts.push(format!("p={p}: {} ideals, {} findings", r.cases_checked, r.findings.len()));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("p={p}: {e}"));
            }
        }
    }
    verdict(ok, parts.join("; "))
}

/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 Macaulay round-trip", 10, criterion_1),
        ("2 Shakin rings are Macaulay-lex", 180, criterion_2),
        ("3 Betti extremality", 300, criterion_3),
        ("4 Betti invariance under distraction", 120, criterion_4),
        ("5 Hilbert preservation under distraction", 60, criterion_5),
        ("6 admissible Hilbert functions in A/D(a)", 180, criterion_6),
        ("7 H^0 can only grow under distraction", 180, criterion_7),
        ("8 local cohomology oracles", 10, criterion_8),
        ("9 Koszul vs Taylor Betti numbers", 120, criterion_9),
        ("10 polarization series identity", 60, criterion_10),
        ("11 positive characteristic sweep", 300, criterion_11),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let v = check();
        let t = start.elapsed();
        let in_time = t <= Duration::from_secs(limit);
        let ok = v.ok && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {name}: {} ({:.2}s / {limit}s) {}{}",
            if ok { "PASS" } else { "FAIL" },
            t.as_secs_f64(),
            v.detail,
            if in_time { "" } else { " [over time budget]" }
        );
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
