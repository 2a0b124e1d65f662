use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::groebner::PrimeField;
use crate::homology::simplicial::SimplicialComplex;
use crate::monomials::{binomial_u64, MonomialIdeal};

/// Hilbert functions of `H^i_m(A/I)` in degrees `jmin..=jmax`; only nonzero
/// entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCohTable {
    pub n: usize,
    pub i_range: (usize, usize),
    pub window: (i64, i64),
    /// Per-variable bound `rho_k` (largest exponent of `x_k` in a generator):
    /// only multidegrees with `a_k < rho_k` can contribute.
    pub support_bound: Vec<u32>,
    /// A nonzero value exists outside the window.
    pub window_truncated: bool,
    #[serde(with = "cell_map")]
    pub entries: BTreeMap<(usize, i64), u64>,
}

impl LocalCohTable {
    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Row `i` as a vector over the window.
    pub fn row(&self, i: usize) -> Vec<u64> {
        (self.window.0..=self.window.1).map(|j| self.get(i, j)).collect()
    }

    pub fn render(&self) -> String {
        let mut out = format!("{:>4} |", "j");
        for i in self.i_range.0..=self.i_range.1 {
            out.push_str(&format!("{:>6}", format!("H{i}")));
        }
        out.push('\n');
        for j in self.window.0..=self.window.1 {
            out.push_str(&format!("{j:>4} |"));
            for i in self.i_range.0..=self.i_range.1 {
                out.push_str(&format!("{:>6}", self.get(i, j)));
            }
            out.push('\n');
        }
        if self.window_truncated {
            out.push_str("(nonzero values exist outside the window)\n");
        }
        out
    }
}

mod cell_map {
    use std::collections::BTreeMap;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, i64), u64>, s: S) -> Result<S::Ok, S::Error> {
        let keyed: BTreeMap<String, u64> = m.iter().map(|((i, j), v)| (format!("{i},{j}"), *v)).collect();
        keyed.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, i64), u64>, D::Error> {
        let keyed = BTreeMap::<String, u64>::deserialize(d)?;
        keyed
            .into_iter()
            .map(|(k, v)| {
                let (i, j) = k.split_once(',').ok_or_else(|| D::Error::custom(format!("bad cell key `{k}`")))?;
                Ok(((i.trim().parse().map_err(D::Error::custom)?, j.trim().parse().map_err(D::Error::custom)?), v))
            })
            .collect()
    }
}

/// The default degree window `[-(sum of generator degrees), dmax]`.
pub fn default_window(ideal: &MonomialIdeal, dmax: i64) -> (i64, i64) {
    let s: i64 = ideal.gens().iter().map(|g| g.degree() as i64).sum();
    (-s, dmax)
}

/// The degree complex of `I` at the multidegree with negative support `neg`
/// and nonnegative part `a` (entries on `neg` are ignored): faces are the
/// `F` disjoint from `neg` such that every generator exceeds `a` in some
/// coordinate outside `F ∪ neg`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &[u32], neg: &[bool]) -> SimplicialComplex {
    let n = ideal.n();
    let free: Vec<usize> = (0..n).filter(|&k| !neg[k]).collect();
    let faces_ok = |f: &[usize]| {
        let f: Vec<usize> = f.iter().map(|&t| free[t]).collect();
        ideal.gens().iter().all(|u| (0..n).any(|k| !neg[k] && !f.contains(&k) && u.exponent(k) > a[k]))
    };
    let cx = SimplicialComplex::from_predicate(free.len(), faces_ok);
    // relabel back to variable indices
    let facets = cx.facets().iter().map(|f| f.iter().map(|&t| free[t]).collect()).collect();
    if cx.is_void() {
        SimplicialComplex::void(n)
    } else {
        SimplicialComplex::new(n, facets)
    }
}

/// `dim_K H^i_m(A/I)_j` for `i` in `i_range` and `j` in `window`, from the
/// degree-complex formula `H^i_m(A/I)_a = H~_{i-|G_a|-1}(Delta_a)`, where
/// `G_a` is the set of negative coordinates of `a`.
pub fn local_coh_monomial(
    ideal: &MonomialIdeal,
    i_range: (usize, usize),
    window: (i64, i64),
    field: &PrimeField,
) -> Result<LocalCohTable> {
    let n = ideal.n();
    if window.0 > window.1 {
        return invalid(format!("empty degree window {}:{}", window.0, window.1));
    }
    if i_range.0 > i_range.1 {
        return invalid("empty cohomological range");
    }
    let rho: Vec<u32> = (0..n).map(|k| ideal.gens().iter().map(|g| g.exponent(k)).max().unwrap_or(0)).collect();
    let mut entries: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    let mut window_truncated = false;
    for mask in 0u32..(1u32 << n) {
        let neg: Vec<bool> = (0..n).map(|k| mask >> k & 1 == 1).collect();
        let g = mask.count_ones() as usize;
        // nonnegative coordinates range over 0..rho_k; coordinates with
        // rho_k = 0 must be negative
        if (0..n).any(|k| !neg[k] && rho[k] == 0) {
            continue;
        }
        let mut a = vec![0u32; n];
        loop {
            let cx = degree_complex(ideal, &a, &neg);
            if !cx.is_void() {
                let b: i64 = (0..n).filter(|&k| !neg[k]).map(|k| a[k] as i64).sum();
                for i in i_range.0..=i_range.1.min(n) {
                    let h = cx.reduced_homology(i as i64 - g as i64 - 1, field);
                    if h == 0 {
                        continue;
                    }
                    if g == 0 {
                        if b < window.0 || b > window.1 {
                            window_truncated = true;
                        } else {
                            *entries.entry((i, b)).or_insert(0) += h;
                        }
                        continue;
                    }
                    // the negative coordinates sum to -s with s >= g in
                    // C(s-1, g-1) ways; degrees go down without bound
                    window_truncated = true;
                    let top = b - g as i64;
                    for j in window.0..=window.1.min(top) {
                        let s = (b - j) as u64;
                        let ways = binomial_u64(s - 1, g as u64 - 1);
                        *entries.entry((i, j)).or_insert(0) += h * ways;
                    }
                }
            }
            // odometer over the nonnegative coordinates
            let mut k = 0;
            while k < n {
                if !neg[k] {
                    a[k] += 1;
                    if a[k] < rho[k] {
                        break;
                    }
                    a[k] = 0;
                }
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    entries.retain(|_, v| *v > 0);
    Ok(LocalCohTable { n, i_range, window, support_bound: rho, window_truncated, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn artinian_is_h0() {
        let f = PrimeField::default();
        let i = mono(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let t = local_coh_monomial(&i, (0, 2), (-3, 6), &f).unwrap();
        let hf = i.hilbert_function(6);
        for j in 0..=6 {
            assert_eq!(t.get(0, j), hf.get(j as usize));
        }
        assert!(t.entries.keys().all(|(i, _)| *i == 0));
        assert!(!t.window_truncated);
    }

    #[test]
    fn polynomial_ring_in_one_variable() {
        // A/(x) = K[y]: H^1 is K[y^-1] y^-1
        let f = PrimeField::default();
        let t = local_coh_monomial(&mono(2, &[&[1, 0]]), (0, 2), (-5, 3), &f).unwrap();
        for j in -5..=3 {
            assert_eq!(t.get(1, j), u64::from(j <= -1));
            assert_eq!(t.get(0, j), 0);
            assert_eq!(t.get(2, j), 0);
        }
        assert!(t.window_truncated);
    }

    #[test]
    fn hypersurface_xy() {
        let f = PrimeField::default();
        let t = local_coh_monomial(&mono(2, &[&[1, 1]]), (0, 2), (-6, 4), &f).unwrap();
        for j in -6..=4 {
            let expected = if j <= -1 { 2 } else if j == 0 { 1 } else { 0 };
            assert_eq!(t.get(1, j), expected, "degree {j}");
            assert_eq!(t.get(0, j), 0);
        }
    }

    #[test]
    fn h0_of_embedded_point() {
        // (x^2, xy): H^0 is one-dimensional in degree 1
        let f = PrimeField::default();
        let t = local_coh_monomial(&mono(2, &[&[2, 0], &[1, 1]]), (0, 2), (-4, 4), &f).unwrap();
        assert_eq!(t.row(0), vec![0, 0, 0, 0, 0, 1, 0, 0, 0]);
        assert_eq!(t.get(1, -1), 1);
    }

    #[test]
    fn polynomial_ring_top_cohomology() {
        // H^2 of K[x,y] has dim (-j-1) in degree j <= -2
        let f = PrimeField::default();
        let t = local_coh_monomial(&MonomialIdeal::zero(2), (0, 2), (-6, 2), &f).unwrap();
        for j in -6..=2 {
            assert_eq!(t.get(2, j), if j <= -2 { (-j - 1) as u64 } else { 0 });
        }
    }
}
