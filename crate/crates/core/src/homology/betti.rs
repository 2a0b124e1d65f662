use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::groebner::{Ideal, Polynomial, PrimeField};
use crate::linalg;
use crate::monomials::{binomial_u64, Monomial, MonomialIdeal, MonomialOrder};

/// Graded Betti numbers `beta_{i,j}(A/I)`, complete for `j <= dmax`.
/// Only nonzero entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBettiTable {
    pub n: usize,
    pub dmax: u32,
    /// Whether nonzero entries may exist in degrees above `dmax`.
    pub truncated: bool,
    #[serde(with = "cell_map")]
    pub entries: BTreeMap<(usize, u32), u64>,
}

impl GradedBettiTable {
    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `sum_i (-1)^i beta_{i,j}`.
    pub fn euler_characteristic(&self, j: u32) -> i64 {
        self.entries.iter().filter(|((_, jj), _)| *jj == j).map(|((i, _), v)| if i % 2 == 0 { *v as i64 } else { -(*v as i64) }).sum()
    }

    /// Total Betti number `beta_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|((ii, _), _)| *ii == i).map(|(_, v)| v).sum()
    }

    /// First cell where `self` exceeds `other`.
    pub fn first_excess_over(&self, other: &GradedBettiTable) -> Option<(usize, u32, u64, u64)> {
        self.entries.iter().find_map(|(&(i, j), &v)| {
            let w = other.get(i, j);
            (v > w).then_some((i, j, v, w))
        })
    }

    /// Human-readable rendering in the usual Macaulay2 layout.
    pub fn render(&self) -> String {
        let max_i = self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = self.entries.keys().map(|(i, j)| j - *i as u32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let mut out = String::from("      ");
        for i in 0..=max_i {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for r in rows {
            out.push_str(&format!("{r:>4}: "));
            for i in 0..=max_i {
                let v = self.get(i, r + i as u32);
                if v == 0 {
                    out.push_str(&format!("{:>6}", "."));
                } else {
                    out.push_str(&format!("{v:>6}"));
                }
            }
            out.push('\n');
        }
        if self.truncated {
            out.push_str(&format!("(degrees above {} not computed)\n", self.dmax));
        }
        out
    }
}

mod cell_map {
    use std::collections::BTreeMap;

    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &BTreeMap<(usize, u32), u64>, s: S) -> Result<S::Ok, S::Error> {
        let keyed: BTreeMap<String, u64> = m.iter().map(|((i, j), v)| (format!("{i},{j}"), *v)).collect();
        keyed.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<(usize, u32), u64>, D::Error> {
        let keyed = BTreeMap::<String, u64>::deserialize(d)?;
        keyed
            .into_iter()
            .map(|(k, v)| {
                let (i, j) = k.split_once(',').ok_or_else(|| D::Error::custom(format!("bad cell key `{k}`")))?;
                let i = i.trim().parse().map_err(D::Error::custom)?;
                let j = j.trim().parse().map_err(D::Error::custom)?;
                Ok(((i, j), v))
            })
            .collect()
    }
}

/// Graded Betti numbers of `A/I` for `j <= dmax` via Koszul homology.
/// Monomial ideals take the multigraded fast path.
pub fn koszul_betti(ideal: &Ideal, dmax: u32) -> GradedBettiTable {
    if let Some(m) = ideal.as_monomial() {
        return monomial_betti(&m, dmax, ideal.field());
    }
    general_koszul(ideal, dmax)
}

/// Koszul homology in each degree `j`: `K_{i,j}` has basis `e_F ⊗ m` with
/// `|F| = i` and `m` a standard monomial of degree `j - i`.
pub(crate) fn general_koszul(ideal: &Ideal, dmax: u32) -> GradedBettiTable {
    let n = ideal.n();
    let field = ideal.field();
    let basis = ideal.basis();
    let lead = MonomialIdeal::from_gens_unchecked(
        n,
        basis.iter().map(|g| g.leading_term(&MonomialOrder::DegRevLex).unwrap().0.clone()).collect(),
    );
    // standard monomials of each degree and their positions
    let standard: Vec<Vec<Monomial>> = (0..=dmax).map(|d| lead.standard_monomials(d)).collect();
    let index: Vec<HashMap<Monomial, usize>> =
        standard.iter().map(|v| v.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect()).collect();
    // x_k * m reduced onto standard monomials of degree deg(m) + 1
    let mut mult: HashMap<(usize, Monomial), Vec<(usize, u32)>> = HashMap::new();
    let mut times = |k: usize, m: &Monomial| -> Vec<(usize, u32)> {
        mult.entry((k, m.clone()))
            .or_insert_with(|| {
                let d = m.degree() as usize + 1;
                let nf = ideal.normal_form(&Polynomial::monomial(m.times_var(k)));
                nf.terms().iter().map(|(t, c)| (index[d][t], *c)).collect()
            })
            .clone()
    };
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| k_subsets(n, i)).collect();
    let subset_index: Vec<HashMap<Vec<usize>, usize>> =
        subsets.iter().map(|v| v.iter().cloned().enumerate().map(|(k, s)| (s, k)).collect()).collect();

    let mut entries = BTreeMap::new();
    for j in 0..=dmax {
        // rank of d_i : K_{i,j} -> K_{i-1,j}, for i = 1..=n
        let mut ranks = vec![0usize; n + 2];
        for i in 1..=n.min(j as usize) {
            let e = j as usize - i;
            let src = &standard[e];
            let tgt_len = subsets[i - 1].len() * standard[e + 1].len();
            if src.is_empty() || tgt_len == 0 {
                continue;
            }
            let mut rows = Vec::with_capacity(subsets[i].len() * src.len());
            for s in &subsets[i] {
                for m in src {
                    let mut row: Vec<(usize, u32)> = Vec::new();
                    for (t, &k) in s.iter().enumerate() {
                        let mut rest = s.clone();
                        rest.remove(t);
                        let base = subset_index[i - 1][&rest] * standard[e + 1].len();
                        for (pos, c) in times(k, m) {
                            let c = if t % 2 == 0 { c } else { field.neg(c) };
                            row.push((base + pos, c));
                        }
                    }
                    rows.push(row);
                }
            }
            ranks[i] = linalg::sparse_rank(&rows, tgt_len, field);
        }
        for i in 0..=n.min(j as usize) {
            let dim = subsets[i].len() * standard[j as usize - i].len();
            let b = dim - ranks[i] - ranks[i + 1];
            if b > 0 {
                entries.insert((i, j), b as u64);
            }
        }
    }
    let top = lead.gens().iter().fold(Monomial::one(n), |acc, g| acc.lcm(g)).degree();
    GradedBettiTable { n, dmax, truncated: top > dmax, entries }
}

/// Multigraded Koszul homology of a monomial quotient: in multidegree `b`
/// the complex has basis `e_F` for `F ⊆ supp(b)` with `x^{b-F} ∉ I`.
pub fn monomial_betti(ideal: &MonomialIdeal, dmax: u32, field: &PrimeField) -> GradedBettiTable {
    let n = ideal.n();
    let rho: Vec<u32> = (0..n).map(|k| ideal.gens().iter().map(|g| g.exponent(k)).max().unwrap_or(0)).collect();
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    let mut b = vec![0u32; n];
    loop {
        let deg: u32 = b.iter().sum();
        if deg <= dmax {
            for (i, v) in multidegree_koszul(ideal, &b, field).into_iter().enumerate() {
                if v > 0 {
                    *entries.entry((i, deg)).or_insert(0) += v;
                }
            }
        }
        // odometer over 0 <= b_k <= rho_k
        let mut k = 0;
        while k < n {
            b[k] += 1;
            if b[k] <= rho[k] {
                break;
            }
            b[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    let top: u32 = rho.iter().sum();
    GradedBettiTable { n, dmax, truncated: top > dmax, entries }
}

/// Homology dimensions `[H_0, .., H_n]` of the Koszul complex of `A/I` in
/// multidegree `b`.
fn multidegree_koszul(ideal: &MonomialIdeal, b: &[u32], field: &PrimeField) -> Vec<u64> {
    let n = b.len();
    let support: Vec<usize> = (0..n).filter(|&k| b[k] > 0).collect();
    let s = support.len();
    // faces[i] = subsets F of the support with |F| = i and x^{b-F} not in I
    let mut faces: Vec<Vec<u64>> = vec![Vec::new(); s + 1];
    for mask in 0u64..(1u64 << s) {
        let mut e = b.to_vec();
        for (t, &k) in support.iter().enumerate() {
            if mask >> t & 1 == 1 {
                e[k] -= 1;
            }
        }
        if !ideal.contains_unchecked(&Monomial::new(e)) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    let rank = |i: usize| -> usize {
        if i == 0 || i > s || faces[i].is_empty() || faces[i - 1].is_empty() {
            return 0;
        }
        let lower = &faces[i - 1];
        let rows: Vec<Vec<(usize, u32)>> = faces[i]
            .iter()
            .map(|&mask| {
                let mut row = Vec::new();
                let mut sign = 0;
                for t in 0..s {
                    if mask >> t & 1 == 1 {
                        if let Ok(pos) = lower.binary_search(&(mask & !(1 << t))) {
                            row.push((pos, if sign % 2 == 0 { 1 } else { field.neg(1) }));
                        }
                        sign += 1;
                    }
                }
                row
            })
            .collect();
        linalg::sparse_rank(&rows, lower.len(), field)
    };
    let ranks: Vec<usize> = (0..=s + 1).map(rank).collect();
    let mut out = vec![0u64; n + 1];
    for i in 0..=s {
        out[i] = (faces[i].len() - ranks[i] - ranks[i + 1]) as u64;
    }
    out
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    debug_assert_eq!(out.len() as u64, binomial_u64(n as u64, k as u64));
    out
}

/// Betti numbers read off the Taylor complex tensored with the residue
/// field: an independent oracle for monomial ideals.
pub fn taylor_betti_oracle(ideal: &MonomialIdeal, dmax: u32, field: &PrimeField) -> GradedBettiTable {
    let n = ideal.n();
    let gens = ideal.gens();
    // subsets of generators with deg lcm <= dmax, grouped by lcm
    let mut groups: BTreeMap<Monomial, Vec<Vec<Vec<usize>>>> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, Monomial)> = vec![(Vec::new(), Monomial::one(n))];
    while let Some((set, lcm)) = stack.pop() {
        let size = set.len();
        let slot = groups.entry(lcm.clone()).or_default();
        if slot.len() <= size {
            slot.resize(size + 1, Vec::new());
        }
        slot[size].push(set.clone());
        let start = set.last().map_or(0, |l| l + 1);
        for (k, g) in gens.iter().enumerate().skip(start) {
            let l = lcm.lcm(g);
            if l.degree() <= dmax {
                let mut next = set.clone();
                next.push(k);
                stack.push((next, l));
            }
        }
    }
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    for (lcm, by_size) in &groups {
        let mut by_size = by_size.clone();
        for v in by_size.iter_mut() {
            v.sort();
        }
        // within one multidegree the differential keeps e_{S \ s} iff lcm is unchanged
        let rank = |i: usize| -> usize {
            if i == 0 || i >= by_size.len() || by_size[i].is_empty() || by_size[i - 1].is_empty() {
                return 0;
            }
            let lower = &by_size[i - 1];
            let rows: Vec<Vec<(usize, u32)>> = by_size[i]
                .iter()
                .map(|set| {
                    (0..set.len())
                        .filter_map(|t| {
                            let mut rest = set.clone();
                            rest.remove(t);
                            lower.binary_search(&rest).ok().map(|pos| (pos, if t % 2 == 0 { 1 } else { field.neg(1) }))
                        })
                        .collect()
                })
                .collect();
            linalg::sparse_rank(&rows, lower.len(), field)
        };
        let ranks: Vec<usize> = (0..=by_size.len()).map(rank).collect();
        for i in 0..by_size.len() {
            let v = by_size[i].len() - ranks[i] - ranks.get(i + 1).copied().unwrap_or(0);
            if v > 0 {
                *entries.entry((i, lcm.degree())).or_insert(0) += v as u64;
            }
        }
    }
    let top = gens.iter().fold(Monomial::one(n), |acc, g| acc.lcm(g)).degree();
    GradedBettiTable { n, dmax, truncated: top > dmax, entries }
}
