//! Macaulay representations, the growth bound `a^<d>`, O-sequences and
//! lex-segment ideals of the polynomial ring.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::monomials::{count_monomials, monomials_of_degree, HilbertFunction, Monomial, MonomialIdeal};

/// `a = C(a_d, d) + C(a_{d-1}, d-1) + ... + C(a_j, j)` with
/// `a_d > a_{d-1} > ... > a_j >= j >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MacaulayRep {
    pub degree: u32,
    /// `(a_i, i)` pairs with strictly decreasing `i`.
    pub terms: Vec<(u64, u32)>,
}

impl MacaulayRep {
    pub fn value(&self) -> BigUint {
        self.terms.iter().map(|&(a, i)| binomial(a, i as u64)).sum()
    }
}

pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::from(0u32);
    }
    let b = b.min(a - b);
    let mut acc = BigUint::from(1u32);
    for k in 0..b {
        acc *= a - k;
        acc /= k + 1;
    }
    acc
}

/// The greedy `d`-th Macaulay representation of `a`.
pub fn macaulay_rep(a: u64, d: u32) -> MacaulayRep {
    let mut rem = BigUint::from(a);
    let mut terms = Vec::new();
    let zero = BigUint::from(0u32);
    let mut i = d as u64;
    while i >= 1 && rem > zero {
        // largest k >= i with C(k, i) <= rem; C(i, i) = 1 <= rem
        let (mut lo, mut hi) = (i, i + a.max(1));
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if binomial(mid, i) <= rem {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        rem -= binomial(lo, i);
        terms.push((lo, i as u32));
        i -= 1;
    }
    MacaulayRep { degree: d, terms }
}

/// `a^<d>`: the largest value allowed in degree `d+1` after value `a` in degree `d`.
pub fn macaulay_bound(a: u64, d: u32) -> BigUint {
    macaulay_rep(a, d).terms.iter().map(|&(ai, i)| binomial(ai + 1, i as u64 + 1)).sum()
}

/// First degree at which `h` fails to be an O-sequence in `n` variables.
pub fn first_o_sequence_failure(h: &HilbertFunction, n: usize) -> Option<usize> {
    let v = h.values();
    if v.is_empty() {
        return None;
    }
    if v[0] > 1 {
        return Some(0);
    }
    if v.len() > 1 && v[1] > n as u64 * v[0] {
        return Some(1);
    }
    for d in 1..v.len().saturating_sub(1) {
        if BigUint::from(v[d + 1]) > macaulay_bound(v[d], d as u32) {
            return Some(d + 1);
        }
    }
    None
}

pub fn is_o_sequence(h: &HilbertFunction, n: usize) -> bool {
    first_o_sequence_failure(h, n).is_none()
}

/// The `k` lex-largest monomials of degree `d` in `n` variables.
pub fn lex_segment(n: usize, d: u32, k: usize) -> Result<Vec<Monomial>> {
    let total = count_monomials(n, d);
    if k as u64 > total {
        return invalid(format!("lex segment of size {k} exceeds the {total} monomials of degree {d}"));
    }
    let mut all = monomials_of_degree(n, d);
    all.truncate(k);
    Ok(all)
}

/// The lex-segment ideal of `K[x1..xn]` whose quotient has Hilbert function
/// `h` up to `h.dmax()`. Generators have degree at most `h.dmax()`.
pub fn lex_ideal_for_hf(n: usize, h: &HilbertFunction) -> Result<MonomialIdeal> {
    if let Some(degree) = first_o_sequence_failure(h, n) {
        return Err(Error::NoSuchIdeal { degree });
    }
    let mut gens: Vec<Monomial> = Vec::new();
    for (d, &hd) in h.values().iter().enumerate() {
        let size = count_monomials(n, d as u32) - hd;
        for mono in lex_segment(n, d as u32, size as usize)? {
            if !gens.iter().any(|g| g.divides(&mono)) {
                gens.push(mono);
            }
        }
    }
    let ideal = MonomialIdeal::new(n, gens)?;
    if ideal.hilbert_function(h.dmax()) != *h {
        return Err(Error::Internal(format!(
            "lex ideal {ideal} does not realise the O-sequence {:?}",
            h.values()
        )));
    }
    Ok(ideal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep_examples() {
        assert!(macaulay_rep(0, 3).terms.is_empty());
        assert_eq!(macaulay_rep(5, 2).terms, vec![(3, 2), (2, 1)]);
        assert_eq!(macaulay_rep(4, 2).terms, vec![(3, 2), (1, 1)]);
        let r = macaulay_rep(1000, 4);
        assert_eq!(r.value(), BigUint::from(1000u32));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(macaulay_bound(0, 4), BigUint::from(0u32));
        assert_eq!(macaulay_bound(3, 1), BigUint::from(6u32));
        assert_eq!(macaulay_bound(5, 2), BigUint::from(7u32));
        // the full degree-d piece grows to the full degree-(d+1) piece
        assert_eq!(macaulay_bound(10, 3), BigUint::from(15u32));
    }

    #[test]
    fn o_sequence_examples() {
        assert!(is_o_sequence(&HilbertFunction::new(vec![1, 3, 6]), 3));
        assert!(!is_o_sequence(&HilbertFunction::new(vec![1, 2, 5]), 2));
        assert!(!is_o_sequence(&HilbertFunction::new(vec![1, 0, 1]), 3));
        assert!(is_o_sequence(&HilbertFunction::new(vec![0, 0, 0]), 3));
        assert_eq!(first_o_sequence_failure(&HilbertFunction::new(vec![0, 1]), 3), Some(1));
    }

    #[test]
    fn lex_segment_examples() {
        let m = |e: &[u32]| Monomial::new(e.to_vec());
        assert_eq!(lex_segment(2, 2, 2).unwrap(), vec![m(&[2, 0]), m(&[1, 1])]);
        assert!(lex_segment(2, 2, 0).unwrap().is_empty());
        assert_eq!(lex_segment(3, 1, 2).unwrap(), vec![m(&[1, 0, 0]), m(&[0, 1, 0])]);
        assert!(lex_segment(2, 1, 3).is_err());
    }

    #[test]
    fn lex_ideal_examples() {
        let h = HilbertFunction::polynomial_ring(3, 4);
        assert!(lex_ideal_for_hf(3, &h).unwrap().is_zero());
        let l = lex_ideal_for_hf(2, &HilbertFunction::new(vec![1, 2, 2, 0])).unwrap();
        assert_eq!(l, MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 2], &[0, 3]]).unwrap());
        let err = lex_ideal_for_hf(2, &HilbertFunction::new(vec![1, 3, 3])).unwrap_err();
        assert_eq!(err, Error::NoSuchIdeal { degree: 1 });
    }
}
