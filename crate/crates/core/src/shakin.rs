//! Piecewise-lex and Shakin ideals, the lex-embedding of their quotient
//! rings, and gluing of degree-wise embedded pieces.
//!
//! Ideals of `R = A/a` are always handled through their pre-images in `A`,
//! which are monomial ideals containing `a`. Hilbert functions passed in are
//! those of the quotient `R/I = A/pre-image`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::monomials::{monomials_of_degree, HilbertFunction, Monomial, MonomialIdeal};

/// Every graded piece of `ideal` is a descending-lex prefix of the monomials
/// of that degree. Checking up to one past the top generator degree suffices.
pub fn is_lex_segment(ideal: &MonomialIdeal) -> bool {
    let top = match ideal.max_gen_degree() {
        Some(t) => t,
        None => return true,
    };
    (0..=top + 1).all(|d| {
        let mut inside = true;
        for m in monomials_of_degree(ideal.n(), d) {
            let c = ideal.contains_unchecked(&m);
            if c && !inside {
                return false;
            }
            inside = c;
        }
        true
    })
}

/// A lex-segment ideal `L_(i)` of `K[x1..xi]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexPiece {
    pub vars: usize,
    pub ideal: MonomialIdeal,
}

/// `L = sum_i L_(i) A` with each `L_(i)` lex in the first `i` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiecewiseLexIdeal {
    n: usize,
    pieces: Vec<LexPiece>,
    total: MonomialIdeal,
}

impl PiecewiseLexIdeal {
    pub fn new(n: usize, pieces: Vec<(usize, MonomialIdeal)>) -> Result<Self> {
        let mut gens = Vec::new();
        let mut out = Vec::with_capacity(pieces.len());
        for (vars, ideal) in pieces {
            if vars == 0 || vars > n {
                return invalid(format!("piece index {vars} outside 1..={n}"));
            }
            if ideal.n() != vars {
                return invalid(format!("piece for A_({vars}) lives in {} variables", ideal.n()));
            }
            if !is_lex_segment(&ideal) {
                return Err(Error::NotLex { vars });
            }
            gens.extend(ideal.gens().iter().map(|g| g.extend(n)));
            out.push(LexPiece { vars, ideal });
        }
        Ok(PiecewiseLexIdeal { n, pieces: out, total: MonomialIdeal::new(n, gens)? })
    }

    pub fn zero(n: usize) -> Self {
        PiecewiseLexIdeal { n, pieces: Vec::new(), total: MonomialIdeal::zero(n) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pieces(&self) -> &[LexPiece] {
        &self.pieces
    }

    pub fn total(&self) -> &MonomialIdeal {
        &self.total
    }
}

/// `a = L + (x1^d1, ..., xr^dr)` with `d1 <= ... <= dr`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ShakinRepr", into = "ShakinRepr")]
pub struct ShakinIdeal {
    lex_part: PiecewiseLexIdeal,
    powers: Vec<u32>,
    total: MonomialIdeal,
}

#[derive(Serialize, Deserialize)]
struct PieceRepr {
    i: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct ShakinRepr {
    n: usize,
    #[serde(default)]
    pieces: Vec<PieceRepr>,
    #[serde(default)]
    powers: Vec<u32>,
}

impl TryFrom<ShakinRepr> for ShakinIdeal {
    type Error = Error;
    fn try_from(r: ShakinRepr) -> Result<Self> {
        let pieces = r
            .pieces
            .into_iter()
            .map(|p| Ok((p.i, MonomialIdeal::new(p.i, p.gens.into_iter().map(Monomial::new).collect())?)))
            .collect::<Result<Vec<_>>>()?;
        ShakinIdeal::new(PiecewiseLexIdeal::new(r.n, pieces)?, r.powers)
    }
}

impl From<ShakinIdeal> for ShakinRepr {
    fn from(s: ShakinIdeal) -> Self {
        ShakinRepr {
            n: s.n(),
            pieces: s
                .lex_part
                .pieces
                .iter()
                .map(|p| PieceRepr {
                    i: p.vars,
                    gens: p.ideal.gens().iter().map(|g| g.exponents().to_vec()).collect(),
                })
                .collect(),
            powers: s.powers,
        }
    }
}

impl ShakinIdeal {
    pub fn new(lex_part: PiecewiseLexIdeal, powers: Vec<u32>) -> Result<Self> {
        let n = lex_part.n();
        if powers.len() > n {
            return invalid(format!("{} pure powers for {n} variables", powers.len()));
        }
        if powers.contains(&0) {
            return invalid("pure power degrees must be positive");
        }
        if powers.windows(2).any(|w| w[0] > w[1]) {
            return invalid(format!("pure power degrees {powers:?} are not nondecreasing"));
        }
        let total = lex_part
            .total()
            .with_generators(powers.iter().enumerate().map(|(i, &d)| Monomial::var_power(n, i, d)));
        Ok(ShakinIdeal { lex_part, powers, total })
    }

    /// A Clements-Lindström ideal `(x1^d1, ..., xr^dr)`.
    pub fn pure_powers(n: usize, powers: Vec<u32>) -> Result<Self> {
        Self::new(PiecewiseLexIdeal::zero(n), powers)
    }

    pub fn n(&self) -> usize {
        self.lex_part.n()
    }

    pub fn lex_part(&self) -> &PiecewiseLexIdeal {
        &self.lex_part
    }

    pub fn powers(&self) -> &[u32] {
        &self.powers
    }

    pub fn total(&self) -> &MonomialIdeal {
        &self.total
    }

    /// Whether some declared pure power is not already in the lex part,
    /// i.e. the ideal is not just its piecewise-lex part.
    pub fn has_pure_powers(&self) -> bool {
        let n = self.n();
        self.powers
            .iter()
            .enumerate()
            .any(|(i, &d)| !self.lex_part.total().contains_unchecked(&Monomial::var_power(n, i, d)))
    }

    /// Pre-image of `eps(H)` for the quotient Hilbert function `h`, up to `dmax`.
    pub fn lex_embed(&self, h: &HilbertFunction, dmax: usize) -> Result<MonomialIdeal> {
        if h.dmax() < dmax {
            return invalid(format!("Hilbert function only known up to degree {}", h.dmax()));
        }
        lex_embed_in(&self.total, &h.truncate(dmax))
    }

    pub fn is_admissible(&self, h: &HilbertFunction, dmax: usize) -> bool {
        self.lex_embed(h, dmax).is_ok()
    }

    /// Embeds the Hilbert function of an actual ideal `I ⊇ a`. Here the
    /// Hilbert function is attained, so a failure contradicts the
    /// Macaulay-lex property and is reported as an internal error.
    pub fn embed_ideal(&self, ideal: &MonomialIdeal, dmax: usize) -> Result<MonomialIdeal> {
        if !self.total.is_subset_of(ideal) {
            return invalid(format!("{ideal} does not contain {}", self.total));
        }
        lex_embed_in(&self.total, &ideal.hilbert_function(dmax)).map_err(|e| match e {
            Error::NotAdmissible { degree, reason } => Error::Internal(format!(
                "lex-embedding of an attained Hilbert function failed in degree {degree}: {reason}"
            )),
            other => other,
        })
    }

    pub fn glue(&self, family: &[(usize, HilbertFunction)], dmax: usize) -> Result<MonomialIdeal> {
        glue_hilbert_functions(&self.total, family, dmax)
    }

    /// Gluing on a family of ideals given by pre-images containing `a`.
    pub fn glue_ideals(&self, family: &[(usize, MonomialIdeal)], dmax: usize) -> Result<MonomialIdeal> {
        let hfs = family
            .iter()
            .map(|(d, i)| {
                if !self.total.is_subset_of(i) {
                    return invalid(format!("family member {i} does not contain {}", self.total));
                }
                Ok((*d, i.hilbert_function(dmax)))
            })
            .collect::<Result<Vec<_>>>()?;
        self.glue(&hfs, dmax)
    }
}

/// Greedy lex-embedding over an arbitrary monomial base ideal.
///
/// In degree `d` the result consists of `base_d` together with the
/// lex-largest `dim (A/base)_d - h_d` standard monomials of `base`. The
/// result is then checked to be closed under multiplication by the
/// variables; any failure is reported as [`Error::NotAdmissible`].
pub fn lex_embed_in(base: &MonomialIdeal, h: &HilbertFunction) -> Result<MonomialIdeal> {
    let n = base.n();
    let mut gens: Vec<Monomial> = base.gens().to_vec();
    let mut prev: Vec<Monomial> = Vec::new();
    for (d, &hd) in h.values().iter().enumerate() {
        let standard = base.standard_monomials(d as u32);
        if hd > standard.len() as u64 {
            return Err(Error::NotAdmissible {
                degree: d,
                reason: format!("H_{d} = {hd} exceeds dim R_{d} = {}", standard.len()),
            });
        }
        let chosen = &standard[..standard.len() - hd as usize];
        let set: HashSet<&Monomial> = chosen.iter().collect();
        for u in &prev {
            for v in 0..n {
                let w = u.times_var(v);
                if !set.contains(&w) && !base.contains_unchecked(&w) {
                    return Err(Error::NotAdmissible {
                        degree: d,
                        reason: format!("{u} * x{} leaves the lex prefix", v + 1),
                    });
                }
            }
        }
        gens.extend(chosen.iter().cloned());
        prev = chosen.to_vec();
    }
    MonomialIdeal::new(n, gens)
}

/// Lex-embedding of the full Hilbert function of `target`, with no
/// truncation: the degree bound is raised until the embedded ideal has the
/// same Hilbert series as `target`. `target` is typically an ideal containing
/// `base`, or an initial ideal of one.
pub fn lex_embed_complete(base: &MonomialIdeal, target: &MonomialIdeal, max_degree: usize) -> Result<MonomialIdeal> {
    let goal = target.hilbert_numerator();
    let start = target.max_gen_degree().unwrap_or(0).max(base.max_gen_degree().unwrap_or(0)) as usize;
    for d in start..=max_degree.max(start) {
        let embedded = lex_embed_in(base, &target.hilbert_function(d))?;
        if embedded.hilbert_numerator() == goal {
            return Ok(embedded);
        }
    }
    Err(Error::Internal(format!("lex-embedding of {target} did not stabilise by degree {max_degree}")))
}

/// Glues degree-wise embedded pieces: the result has degree-`d` piece
/// `eps(H^(d))_d` for every `d <= dmax`. The family must list degrees
/// `0..=dmax` in order and consecutive members must agree in degree `d+1`.
pub fn glue_hilbert_functions(
    base: &MonomialIdeal,
    family: &[(usize, HilbertFunction)],
    dmax: usize,
) -> Result<MonomialIdeal> {
    if family.len() != dmax + 1 {
        return Err(Error::InvalidFamily {
            degree: family.len().min(dmax + 1),
            reason: format!("expected one member per degree 0..={dmax}, got {}", family.len()),
        });
    }
    for (k, (d, h)) in family.iter().enumerate() {
        if *d != k {
            return Err(Error::InvalidFamily { degree: k, reason: format!("member {k} is labelled degree {d}") });
        }
        let need = (k + 1).min(dmax);
        if h.dmax() < need {
            return Err(Error::InvalidFamily {
                degree: k,
                reason: format!("Hilbert function known only up to degree {}", h.dmax()),
            });
        }
    }
    for w in family.windows(2) {
        let d = w[0].0;
        if w[0].1.get(d + 1) != w[1].1.get(d + 1) {
            return Err(Error::InvalidFamily {
                degree: d + 1,
                reason: format!("members {d} and {} disagree in degree {}", d + 1, d + 1),
            });
        }
    }
    let n = base.n();
    let mut pieces: Vec<Vec<Monomial>> = Vec::with_capacity(dmax + 1);
    for (d, h) in family {
        let embedded = lex_embed_in(base, &h.truncate(*d))?;
        pieces.push(embedded.monomials_in_degree(*d as u32));
    }
    for d in 0..dmax {
        let next: HashSet<&Monomial> = pieces[d + 1].iter().collect();
        for u in &pieces[d] {
            for v in 0..n {
                if !next.contains(&u.times_var(v)) {
                    return Err(Error::Internal(format!(
                        "glued pieces are not closed: {u} * x{} missing in degree {}",
                        v + 1,
                        d + 1
                    )));
                }
            }
        }
    }
    let glued = base.with_generators(pieces.into_iter().flatten());
    let hf = glued.hilbert_function(dmax);
    for (d, h) in family {
        if hf.get(*d) != h.get(*d) {
            return Err(Error::Internal(format!("glued ideal misses H_{d}")));
        }
    }
    Ok(glued)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn hf(v: &[u64]) -> HilbertFunction {
        HilbertFunction::new(v.to_vec())
    }

    #[test]
    fn lex_segment_checks() {
        assert!(is_lex_segment(&ideal(2, &[&[1, 0]])));
        assert!(!is_lex_segment(&ideal(2, &[&[0, 1]])));
        assert!(is_lex_segment(&MonomialIdeal::maximal_power(2, 2)));
        assert!(is_lex_segment(&MonomialIdeal::zero(3)));
        assert!(!is_lex_segment(&ideal(2, &[&[1, 1]])));
    }

    #[test]
    fn piecewise_lex_construction() {
        let p = PiecewiseLexIdeal::new(3, vec![]).unwrap();
        assert!(p.total().is_zero());
        let p = PiecewiseLexIdeal::new(3, vec![(1, ideal(1, &[&[2]]))]).unwrap();
        assert_eq!(p.total(), &ideal(3, &[&[2, 0, 0]]));
        let err = PiecewiseLexIdeal::new(3, vec![(2, ideal(2, &[&[1, 1]]))]).unwrap_err();
        assert_eq!(err, Error::NotLex { vars: 2 });
        assert!(PiecewiseLexIdeal::new(2, vec![(3, ideal(3, &[&[1, 0, 0]]))]).is_err());
    }

    #[test]
    fn shakin_construction() {
        let s = ShakinIdeal::pure_powers(2, vec![2, 2]).unwrap();
        assert_eq!(s.total(), &ideal(2, &[&[2, 0], &[0, 2]]));
        assert!(matches!(ShakinIdeal::pure_powers(2, vec![3, 2]), Err(Error::InvalidInput(_))));
        let l = PiecewiseLexIdeal::new(2, vec![(1, ideal(1, &[&[2]]))]).unwrap();
        let s = ShakinIdeal::new(l.clone(), vec![]).unwrap();
        assert_eq!(s.total(), &ideal(2, &[&[2, 0]]));
        assert!(!s.has_pure_powers());
        assert!(!ShakinIdeal::new(l, vec![2]).unwrap().has_pure_powers());
        assert!(ShakinIdeal::pure_powers(3, vec![2]).unwrap().has_pure_powers());
    }

    #[test]
    fn shakin_json() {
        let s: ShakinIdeal = serde_json::from_str(r#"{"n":3, "pieces":[{"i":1,"gens":[[2]]}], "powers":[2,3]}"#).unwrap();
        assert_eq!(s.total(), &ideal(3, &[&[2, 0, 0], &[0, 3, 0]]));
        let back: ShakinIdeal = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ShakinIdeal>(r#"{"n":2,"powers":[3,2]}"#).is_err());
    }

    #[test]
    fn lex_embed_examples() {
        let s = ShakinIdeal::pure_powers(2, vec![2, 2]).unwrap();
        let r = s.total().hilbert_function(4);
        assert_eq!(&s.lex_embed(&r, 4).unwrap(), s.total());
        let l = s.lex_embed(&hf(&[1, 1, 0]), 2).unwrap();
        assert_eq!(l, ideal(2, &[&[1, 0], &[0, 2]]));
        assert_eq!(l.standard_monomials(1), vec![Monomial::new(vec![0, 1])]);
        let err = s.lex_embed(&hf(&[1, 3]), 1).unwrap_err();
        assert!(matches!(err, Error::NotAdmissible { degree: 1, .. }));
    }

    #[test]
    fn admissibility_examples() {
        let s = ShakinIdeal::pure_powers(3, vec![2, 2, 2]).unwrap();
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[0, 1, 1]]);
        assert!(s.is_admissible(&i.hilbert_function(4), 4));
        assert!(!s.is_admissible(&hf(&[1, 4]), 1));
        let zero = ShakinIdeal::pure_powers(2, vec![]).unwrap();
        assert!(!zero.is_admissible(&hf(&[1, 2, 4]), 2));
        // dimensions fit but x*y escapes the prefix {x^2}
        assert!(!zero.is_admissible(&hf(&[1, 1, 2]), 2));
    }

    #[test]
    fn embed_ideal_matches_hilbert_function() {
        let s = ShakinIdeal::pure_powers(3, vec![2, 3]).unwrap();
        let i = ideal(3, &[&[2, 0, 0], &[0, 3, 0], &[0, 1, 1], &[0, 0, 3]]);
        let e = s.embed_ideal(&i, 6).unwrap();
        assert!(s.total().is_subset_of(&e));
        assert_eq!(e.hilbert_function(6), i.hilbert_function(6));
        assert!(s.embed_ideal(&ideal(3, &[&[0, 1, 0]]), 3).is_err());
    }

    #[test]
    fn complete_embedding_has_same_series() {
        let base = MonomialIdeal::zero(3);
        let target = ideal(3, &[&[2, 0, 0], &[0, 2, 0]]);
        let e = lex_embed_complete(&base, &target, 40).unwrap();
        assert_eq!(e.hilbert_numerator(), target.hilbert_numerator());
        assert!(is_lex_segment(&e));
        // lex ideal with HF of a complete intersection of two quadrics needs
        // generators beyond degree 2
        assert!(e.max_gen_degree().unwrap() > 2);
    }

    #[test]
    fn glue_examples() {
        let s = ShakinIdeal::pure_powers(2, vec![2, 3]).unwrap();
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let constant: Vec<_> = (0..=4).map(|d| (d, i.clone())).collect();
        assert_eq!(s.glue_ideals(&constant, 4).unwrap(), s.embed_ideal(&i, 4).unwrap());

        // (x^2, y^3) and (x^2, xy^2, y^3) agree in degrees <= 2 and differ in 3
        let j = ideal(2, &[&[2, 0], &[1, 2], &[0, 3]]);
        let (hi, hj) = (i.hilbert_function(4), j.hilbert_function(4));
        let family: Vec<_> = (0..=4).map(|d| (d, if d <= 1 { s.total().clone() } else { j.clone() })).collect();
        assert_eq!(s.total().hilbert_function(4).get(2), hj.get(2));
        let glued = s.glue_ideals(&family, 4).unwrap();
        let g = glued.hilbert_function(4);
        for (d, member) in &family {
            assert_eq!(g.get(*d), member.hilbert_function(4).get(*d));
        }
        assert_ne!(hi, hj);

        let bad: Vec<_> = (0..=4).map(|d| (d, if d <= 1 { i.clone() } else { s.total().clone() })).collect();
        assert!(matches!(s.glue_ideals(&bad, 4), Err(Error::InvalidFamily { degree: 2, .. })));
        assert!(matches!(s.glue(&[], 2), Err(Error::InvalidFamily { .. })));
    }
}
