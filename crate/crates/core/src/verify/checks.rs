//! Property checks over enumerated or sampled ideals. Each check returns a
//! [`VerificationReport`]; errors are reserved for bad input and exhausted
//! enumeration budgets.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::distraction::DistractionMatrix;
use crate::error::{invalid, Error, Result};
use crate::groebner::{Ideal, PrimeField};
use crate::homology::{koszul_betti, local_coh_monomial, monomial_betti, GradedBettiTable};
use crate::monomials::{HilbertFunction, MonomialIdeal, MonomialOrder};
use crate::shakin::{lex_embed_complete, lex_embed_in, ShakinIdeal};
use crate::verify::enumerate::enumerate_monomial_ideals_modulo;
use crate::verify::report::{CaseOutcome, VerificationReport};
use crate::verify::sampling::{case_rng, random_form, random_monomial_ideal};

/// How far the complete lex-embedding may raise its degree bound.
const COMPLETE_EMBEDDING_LIMIT: usize = 60;

/// The base ring `A/a` of a check. `Unchecked` skips the Shakin structure
/// validation so that the harness can be pointed at other monomial ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseRing {
    Shakin(ShakinIdeal),
    Unchecked(MonomialIdeal),
}

impl BaseRing {
    pub fn ideal(&self) -> &MonomialIdeal {
        match self {
            BaseRing::Shakin(s) => s.total(),
            BaseRing::Unchecked(m) => m,
        }
    }

    pub fn n(&self) -> usize {
        self.ideal().n()
    }

    /// Whether the pure-power part is nonzero; unknown for unchecked bases,
    /// which are treated as having one.
    pub fn has_pure_powers(&self) -> bool {
        match self {
            BaseRing::Shakin(s) => s.has_pure_powers(),
            BaseRing::Unchecked(_) => true,
        }
    }

    fn describe(&self) -> Value {
        match self {
            BaseRing::Shakin(s) => json!({"kind": "shakin", "ideal": s}),
            BaseRing::Unchecked(m) => json!({"kind": "unchecked", "ideal": m}),
        }
    }
}

fn enumerate(base: &BaseRing, dmax: u32, budget: usize) -> Result<Vec<MonomialIdeal>> {
    enumerate_monomial_ideals_modulo(base.ideal(), dmax, budget)
}

/// Every Hilbert function of a quotient `A/I` with `I ⊇ a` (generated in
/// degrees `<= dmax`) is attained by the lex-embedding.
pub fn verify_macaulay_lex(base: &BaseRing, dmax: u32, budget: usize) -> Result<VerificationReport> {
    let a = base.ideal();
    let ideals = enumerate(base, dmax, budget)?;
    let outcomes: Vec<CaseOutcome> = ideals
        .par_iter()
        .map(|i| {
            let h = i.hilbert_function(dmax as usize);
            match lex_embed_in(a, &h) {
                Err(e) => CaseOutcome::failure(json!({"ideal": i, "hf": h, "error": e.to_string()})),
                Ok(l) => {
                    let got = l.hilbert_function(dmax as usize);
                    if got != h || !a.is_subset_of(&l) {
                        CaseOutcome::failure(json!({"ideal": i, "hf": h, "embedded": l, "embedded_hf": got}))
                    } else if ideals.binary_search(&l).is_err() {
                        CaseOutcome::failure(json!({"ideal": i, "embedded": l, "error": "embedded ideal missing from the enumeration"}))
                    } else {
                        CaseOutcome::ok()
                    }
                }
            }
        })
        .collect();
    let mut report = VerificationReport::new("macaulay-lex").param("base", base.describe()).param("dmax", dmax).param("budget", budget);
    report.absorb(outcomes);
    Ok(report)
}

/// `beta_ij(A/I) <= beta_ij(A/eps(I))` for every enumerated `I`, for
/// `j <= betti_dmax`.
///
/// Violations count as failures, except in positive characteristic below
/// the default when the pure-power part is nonzero: there the inequality is
/// only conjectured and violations are reported as findings.
pub fn verify_betti_extremal(
    base: &BaseRing,
    dmax: u32,
    betti_dmax: u32,
    field: PrimeField,
    budget: usize,
) -> Result<VerificationReport> {
    let a = base.ideal();
    let ideals = enumerate(base, dmax, budget)?;
    let conjectural = base.has_pure_powers() && field.characteristic() < PrimeField::DEFAULT_CHARACTERISTIC;
    let outcomes: Vec<CaseOutcome> = ideals
        .par_iter()
        .map(|i| {
            let h = i.hilbert_function(betti_dmax as usize);
            let l = match lex_embed_in(a, &h) {
                Ok(l) => l,
                Err(e) => return CaseOutcome::failure(json!({"ideal": i, "hf": h, "error": e.to_string()})),
            };
            let bi = monomial_betti(i, betti_dmax, &field);
            let bl = monomial_betti(&l, betti_dmax, &field);
            match bi.first_excess_over(&bl) {
                None => CaseOutcome::ok(),
                Some((ii, j, v, w)) => {
                    let payload = json!({"ideal": i, "embedded": l, "i": ii, "j": j, "ideal_betti": v, "embedded_betti": w});
                    if conjectural {
                        CaseOutcome { failures: Vec::new(), findings: vec![payload] }
                    } else {
                        CaseOutcome::failure(payload)
                    }
                }
            }
        })
        .collect();
    let mut report = VerificationReport::new("betti-extremal")
        .param("base", base.describe())
        .param("dmax", dmax)
        .param("betti_dmax", betti_dmax)
        .param("char", field.characteristic())
        .param("budget", budget);
    if base.has_pure_powers() {
        report.notices.push(format!(
            "the pure-power part is nonzero: the inequality is proven in characteristic zero (emulated by p = {}) and only conjectured in positive characteristic",
            PrimeField::DEFAULT_CHARACTERISTIC
        ));
        if conjectural {
            report.notices.push(format!("p = {} is below the emulation prime: violations are findings", field.characteristic()));
        }
    }
    report.absorb(outcomes);
    Ok(report)
}

/// `HF(H^i_m(A/I))_j <= HF(H^i_m(A/eps(I)))_j` for every enumerated `I`,
/// all `i` and all `j` in `window`, both sides via the degree complex.
pub fn verify_coh_extremal(base: &BaseRing, dmax: u32, window: (i64, i64), field: PrimeField, budget: usize) -> Result<VerificationReport> {
    let a = base.ideal();
    let n = base.n();
    let ideals = enumerate(base, dmax, budget)?;
    let outcomes: Vec<CaseOutcome> = ideals
        .par_iter()
        .map(|i| {
            let l = match lex_embed_complete(a, i, COMPLETE_EMBEDDING_LIMIT) {
                Ok(l) => l,
                Err(e) => return CaseOutcome::failure(json!({"ideal": i, "error": e.to_string()})),
            };
            let (ti, tl) = match (local_coh_monomial(i, (0, n), window, &field), local_coh_monomial(&l, (0, n), window, &field)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return CaseOutcome::failure(json!({"ideal": i, "error": e.to_string()})),
            };
            let bad = ti.entries.iter().find(|(&(c, j), &v)| v > tl.get(c, j));
            match bad {
                None => CaseOutcome::ok(),
                Some((&(c, j), &v)) => CaseOutcome::failure(
                    json!({"ideal": i, "embedded": l, "i": c, "j": j, "ideal_value": v, "embedded_value": tl.get(c, j)}),
                ),
            }
        })
        .collect();
    let mut report = VerificationReport::new("coh-extremal")
        .param("base", base.describe())
        .param("dmax", dmax)
        .param("window", window)
        .param("char", field.characteristic())
        .param("budget", budget);
    report.absorb(outcomes);
    Ok(report)
}

/// A sampled ideal `J ⊇ D(a)`: the distraction of an enumerated monomial
/// ideal, possibly enlarged by random forms.
struct SampledIdeal {
    source: MonomialIdeal,
    ideal: Ideal,
    extra: Vec<String>,
}

fn sample_over_distraction(
    ideals: &[MonomialIdeal],
    d: &DistractionMatrix,
    dmax: u32,
    seed: u64,
    index: u64,
) -> Result<SampledIdeal> {
    let mut rng = case_rng(seed, index);
    // case 0 is the distracted base ideal itself
    let source = if index == 0 { ideals[0].clone() } else { ideals[rng.gen_range(0..ideals.len())].clone() };
    let mut gens = d.distract_ideal(&source)?.gens().to_vec();
    let mut extra = Vec::new();
    if index > 0 && rng.gen_bool(0.5) {
        for _ in 0..rng.gen_range(1..=2) {
            let deg = rng.gen_range(1..=dmax.max(1));
            let f = random_form(d.n(), deg, 3, d.field(), &mut rng);
            if !f.is_zero() {
                extra.push(f.display(d.field()));
                gens.push(f);
            }
        }
    }
    Ok(SampledIdeal { source, ideal: Ideal::new(d.n(), *d.field(), gens)?, extra })
}

fn sample_payload(s: &SampledIdeal) -> Value {
    json!({"source": s.source, "extra_generators": s.extra, "ideal": s.ideal})
}

fn check_distraction(a: &ShakinIdeal, d: &DistractionMatrix) -> Result<()> {
    if d.n() != a.n() {
        return invalid(format!("distraction has {} rows, base ring has {} variables", d.n(), a.n()));
    }
    if let Some(sel) = d.validate().failing_selection {
        return invalid(format!("not a distraction: selection {sel:?} does not span the linear forms"));
    }
    Ok(())
}

/// Sampled `J ⊇ D(a)` have admissible Hilbert functions: `eps(HF(A/J))`
/// exists, and distracting it gives back an ideal with that Hilbert function.
pub fn verify_distraction_hf(
    a: &ShakinIdeal,
    d: &DistractionMatrix,
    dmax: u32,
    samples: usize,
    seed: u64,
    budget: usize,
) -> Result<VerificationReport> {
    check_distraction(a, d)?;
    let base = BaseRing::Shakin(a.clone());
    let mut ideals = enumerate(&base, dmax, budget)?;
    // keep the base ideal first so that case 0 is D(a)
    ideals.retain(|i| i != a.total());
    ideals.insert(0, a.total().clone());
    let outcomes: Vec<CaseOutcome> = (0..samples as u64)
        .into_par_iter()
        .map(|k| {
            let s = match sample_over_distraction(&ideals, d, dmax, seed, k) {
                Ok(s) => s,
                Err(e) => return CaseOutcome::failure(json!({"case": k, "error": e.to_string()})),
            };
            let h = s.ideal.hilbert_function(dmax as usize);
            match a.lex_embed(&h, dmax as usize) {
                Err(e) => CaseOutcome::failure(json!({"case": k, "sample": sample_payload(&s), "hf": h, "error": e.to_string()})),
                Ok(l) => {
                    let back = d.distract_ideal(&l).map(|dl| dl.hilbert_function(dmax as usize));
                    match back {
                        Ok(hb) if hb == h => CaseOutcome::ok(),
                        other => CaseOutcome::failure(json!({
                            "case": k, "sample": sample_payload(&s), "hf": h, "embedded": l,
                            "distracted_embedded_hf": other.map_err(|e| e.to_string()),
                        })),
                    }
                }
            }
        })
        .collect();
    let mut report = VerificationReport::new("distraction-hf")
        .param("base", a)
        .param("distraction", d)
        .param("dmax", dmax)
        .param("samples", samples)
        .param("seed", seed)
        .param("budget", budget);
    report.absorb(outcomes);
    Ok(report)
}

/// `eps_D(H) = D(eps(H))`, checked to have Hilbert function `H` up to `dmax`.
pub fn epsilon_d(a: &ShakinIdeal, d: &DistractionMatrix, h: &HilbertFunction, dmax: usize) -> Result<Ideal> {
    check_distraction(a, d)?;
    let l = a.lex_embed(h, dmax)?;
    let j = d.distract_ideal(&l)?;
    let got = j.hilbert_function(dmax);
    if got != h.truncate(dmax) {
        return Err(Error::Internal(format!(
            "distracted embedding has Hilbert function {:?}, expected {:?}",
            got.values(),
            h.truncate(dmax).values()
        )));
    }
    Ok(j)
}

/// Parameters of the sampled checks that draw their own monomial ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSpec {
    pub n: usize,
    pub samples: usize,
    /// Largest number of generators of a sampled ideal.
    pub max_gens: usize,
    /// Largest degree of a sampled generator.
    pub max_degree: u32,
    pub dmax: u32,
    pub seed: u64,
}

impl SampleSpec {
    fn record(&self, report: VerificationReport, field: &PrimeField) -> VerificationReport {
        report
            .param("n", self.n)
            .param("samples", self.samples)
            .param("max_gens", self.max_gens)
            .param("max_degree", self.max_degree)
            .param("dmax", self.dmax)
            .param("seed", self.seed)
            .param("char", field.characteristic())
    }

    fn draw(&self, k: u64, field: &PrimeField) -> (MonomialIdeal, DistractionMatrix) {
        let mut rng = case_rng(self.seed, k);
        let i = random_monomial_ideal(self.n, self.max_gens, self.max_degree, &mut rng);
        let d = DistractionMatrix::random(self.n, self.max_degree as usize, *field, &mut rng);
        (i, d)
    }
}

/// `beta(A/I) = beta(A/D(I))` exactly, on sampled pairs.
pub fn verify_betti_distraction_invariance(spec: &SampleSpec, field: PrimeField) -> VerificationReport {
    let outcomes: Vec<CaseOutcome> = (0..spec.samples as u64)
        .into_par_iter()
        .map(|k| {
            let (i, d) = spec.draw(k, &field);
            let dj = match d.distract_ideal(&i) {
                Ok(x) => x,
                Err(e) => return CaseOutcome::failure(json!({"case": k, "error": e.to_string()})),
            };
            let bi = monomial_betti(&i, spec.dmax, &field);
            let bd = koszul_betti(&dj, spec.dmax);
            if bi.entries == bd.entries {
                CaseOutcome::ok()
            } else {
                CaseOutcome::failure(json!({"case": k, "ideal": i, "distraction": d, "betti": bi, "distracted_betti": bd}))
            }
        })
        .collect();
    let mut report = spec.record(VerificationReport::new("betti-distraction-invariance"), &field);
    report.absorb(outcomes);
    report
}

/// `HF(H^0_m(A/a))_j <= HF(H^0_m(A/D(a)))_j` for `j <= dmax`, on sampled pairs.
pub fn verify_codistra_h0(spec: &SampleSpec, field: PrimeField) -> VerificationReport {
    let outcomes: Vec<CaseOutcome> = (0..spec.samples as u64)
        .into_par_iter()
        .map(|k| {
            let (a, d) = spec.draw(k, &field);
            let da = match d.distract_ideal(&a) {
                Ok(x) => x,
                Err(e) => return CaseOutcome::failure(json!({"case": k, "error": e.to_string()})),
            };
            let lhs = Ideal::from_monomial_ideal(&a, field).h0_hilbert_function(spec.dmax as usize);
            let rhs = da.h0_hilbert_function(spec.dmax as usize);
            match (0..=spec.dmax as usize).find(|&j| lhs.get(j) > rhs.get(j)) {
                None => CaseOutcome::ok(),
                Some(j) => CaseOutcome::failure(json!({"case": k, "ideal": a, "distraction": d, "j": j, "h0": lhs, "distracted_h0": rhs})),
            }
        })
        .collect();
    let mut report = spec.record(VerificationReport::new("codistra-h0"), &field);
    report.not_attempted.push("local cohomology in degrees i >= 1 of distracted (non-monomial) ideals".into());
    report.absorb(outcomes);
    report
}

fn betti_excess(lhs: &GradedBettiTable, rhs: &GradedBettiTable) -> Option<Value> {
    lhs.first_excess_over(rhs).map(|(i, j, v, w)| json!({"i": i, "j": j, "lhs": v, "rhs": w}))
}

/// For sampled `J ⊇ D(a)` with Hilbert function `H`: the targets `eps(H)`
/// (in `A/a`) and `eps_D(H) = D(eps(H))` have `H^0` at least as large as
/// `A/J` in every degree, and — when the pure-power part is zero — Betti
/// numbers at least as large.
pub fn verify_epsilon_d_extremal(
    a: &ShakinIdeal,
    d: &DistractionMatrix,
    dmax: u32,
    samples: usize,
    seed: u64,
    budget: usize,
) -> Result<VerificationReport> {
    check_distraction(a, d)?;
    let field = *d.field();
    let base = BaseRing::Shakin(a.clone());
    let mut ideals = enumerate(&base, dmax, budget)?;
    ideals.retain(|i| i != a.total());
    ideals.insert(0, a.total().clone());
    let check_betti = !a.has_pure_powers();
    let outcomes: Vec<CaseOutcome> = (0..samples as u64)
        .into_par_iter()
        .map(|k| {
            let s = match sample_over_distraction(&ideals, d, dmax, seed, k) {
                Ok(s) => s,
                Err(e) => return CaseOutcome::failure(json!({"case": k, "error": e.to_string()})),
            };
            let lead = s.ideal.initial_ideal(&MonomialOrder::DegRevLex);
            let l = match lex_embed_complete(a.total(), &lead, COMPLETE_EMBEDDING_LIMIT) {
                Ok(l) => l,
                Err(e) => return CaseOutcome::failure(json!({"case": k, "sample": sample_payload(&s), "error": e.to_string()})),
            };
            let dl = match d.distract_ideal(&l) {
                Ok(x) => x,
                Err(e) => return CaseOutcome::failure(json!({"case": k, "error": e.to_string()})),
            };
            let mut problems = Vec::new();
            let h0 = s.ideal.h0_hilbert_function(dmax as usize);
            let h0_eps = Ideal::from_monomial_ideal(&l, field).h0_hilbert_function(dmax as usize);
            let h0_epsd = dl.h0_hilbert_function(dmax as usize);
            for (name, target) in [("eps", &h0_eps), ("eps_D", &h0_epsd)] {
                if let Some(j) = (0..=dmax as usize).find(|&j| h0.get(j) > target.get(j)) {
                    problems.push(json!({"check": format!("h0 vs {name}"), "j": j, "lhs": h0.get(j), "rhs": target.get(j)}));
                }
            }
            if check_betti {
                let bj = koszul_betti(&s.ideal, dmax);
                let bl = monomial_betti(&l, dmax, &field);
                let bdl = koszul_betti(&dl, dmax);
                for (name, target) in [("eps", &bl), ("eps_D", &bdl)] {
                    if let Some(p) = betti_excess(&bj, target) {
                        problems.push(json!({"check": format!("betti vs {name}"), "cell": p}));
                    }
                }
            }
            if problems.is_empty() {
                CaseOutcome::ok()
            } else {
                CaseOutcome::failure(json!({"case": k, "sample": sample_payload(&s), "embedded": l, "problems": problems}))
            }
        })
        .collect();
    let mut report = VerificationReport::new("epsilon-d-extremal")
        .param("base", a)
        .param("distraction", d)
        .param("dmax", dmax)
        .param("samples", samples)
        .param("seed", seed)
        .param("budget", budget);
    report.not_attempted.push("local cohomology in degrees i >= 1 of non-monomial ideals".into());
    if !check_betti {
        report.notices.push("Betti extremality requires the pure-power part to be zero; the Betti comparison was skipped".into());
        report.not_attempted.push("Betti comparison (pure-power part is nonzero)".into());
    }
    report.absorb(outcomes);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shakin::PiecewiseLexIdeal;
    use crate::verify::enumerate::DEFAULT_BUDGET;

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn lex_piece(n: usize, i: usize, gens: &[&[u32]]) -> PiecewiseLexIdeal {
        PiecewiseLexIdeal::new(n, vec![(i, mono(i, gens))]).unwrap()
    }

    #[test]
    fn macaulay_lex_on_a_shakin_ring() {
        let a = ShakinIdeal::new(lex_piece(2, 1, &[&[2]]), vec![2, 3]).unwrap();
        let r = verify_macaulay_lex(&BaseRing::Shakin(a), 4, DEFAULT_BUDGET).unwrap();
        assert!(r.passed && r.cases_checked > 0, "{r:?}");
    }

    #[test]
    fn macaulay_lex_unit_ideal_is_vacuous() {
        let r = verify_macaulay_lex(&BaseRing::Unchecked(MonomialIdeal::unit(2)), 3, DEFAULT_BUDGET).unwrap();
        assert!(r.passed);
        assert_eq!(r.cases_checked, 1);
    }

    #[test]
    fn macaulay_lex_escape_hatch_finds_counterexample() {
        // A/(x2^2) is not Macaulay-lex: (x1^2)'s Hilbert function has no lex witness
        let r = verify_macaulay_lex(&BaseRing::Unchecked(mono(2, &[&[0, 2]])), 3, DEFAULT_BUDGET).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn betti_extremal_small() {
        let a = ShakinIdeal::new(lex_piece(2, 1, &[&[2]]), vec![]).unwrap();
        let r = verify_betti_extremal(&BaseRing::Shakin(a), 4, 6, PrimeField::default(), DEFAULT_BUDGET).unwrap();
        assert!(r.passed, "{:?}", r.failures.first());
    }

    #[test]
    fn coh_extremal_artinian() {
        let a = ShakinIdeal::pure_powers(2, vec![2, 2]).unwrap();
        let r = verify_coh_extremal(&BaseRing::Shakin(a), 3, (-4, 4), PrimeField::default(), DEFAULT_BUDGET).unwrap();
        assert!(r.passed, "{:?}", r.failures.first());
    }

    #[test]
    fn epsilon_d_examples() {
        let f = PrimeField::default();
        let a = ShakinIdeal::pure_powers(2, vec![2, 2]).unwrap();
        let id = DistractionMatrix::identity(2, f);
        let h = HilbertFunction::new(vec![1, 1, 0]);
        let j = epsilon_d(&a, &id, &h, 2).unwrap();
        assert_eq!(j.as_monomial().unwrap(), mono(2, &[&[1, 0], &[0, 2]]));
        let full = a.total().hilbert_function(4);
        let d = DistractionMatrix::random(2, 2, f, &mut case_rng(4, 0));
        assert_eq!(epsilon_d(&a, &d, &full, 4).unwrap(), d.distract_ideal(a.total()).unwrap());
        let generic = epsilon_d(&a, &d, &h, 2).unwrap();
        assert_eq!(generic.hilbert_function(2), h);
    }

    #[test]
    fn sampled_checks_pass() {
        let f = PrimeField::default();
        let spec = SampleSpec { n: 3, samples: 6, max_gens: 3, max_degree: 3, dmax: 6, seed: 1 };
        assert!(verify_betti_distraction_invariance(&spec, f).passed);
        assert!(verify_codistra_h0(&spec, f).passed);
        let a = ShakinIdeal::new(lex_piece(3, 1, &[&[2]]), vec![]).unwrap();
        let d = DistractionMatrix::random(3, 3, f, &mut case_rng(2, 0));
        let r = verify_distraction_hf(&a, &d, 3, 6, 5, DEFAULT_BUDGET).unwrap();
        assert!(r.passed, "{:?}", r.failures.first());
        let r = verify_epsilon_d_extremal(&a, &d, 3, 4, 5, DEFAULT_BUDGET).unwrap();
        assert!(r.passed, "{:?}", r.failures.first());
    }

    #[test]
    fn reports_replay() {
        let f = PrimeField::default();
        let spec = SampleSpec { n: 3, samples: 4, max_gens: 3, max_degree: 3, dmax: 5, seed: 77 };
        assert_eq!(verify_codistra_h0(&spec, f), verify_codistra_h0(&spec, f));
    }
}
