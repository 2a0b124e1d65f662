//! Exponent-vector monomials, monomial orders, monomial ideals and the
//! Hilbert functions of their quotients.
//!
//! Variables are `x1 > x2 > ... > xn`. Lex comparison of exponent vectors is
//! the derived `Ord` of [`Monomial`], so "descending lex" is simply the
//! reverse of the natural sort.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// `x1^a1 * ... * xn^an`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl From<Vec<u32>> for Monomial {
    fn from(exponents: Vec<u32>) -> Self {
        Monomial::new(exponents)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exponents
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exponents: vec![0; n], degree: 0 }
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial { exponents: e, degree: 1 }
    }

    /// `x_{i+1}^k`.
    pub fn var_power(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Monomial::new(e)
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.degree <= other.degree
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exponents[i] += 1;
        m.degree += 1;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.min(b)).collect())
    }

    /// Exponentwise `max(self - other, 0)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents.iter().zip(&other.exponents).map(|(a, b)| a.saturating_sub(*b)).collect(),
        )
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.colon(other))
        } else {
            None
        }
    }

    /// Pads with zero exponents up to `n` variables.
    pub fn extend(&self, n: usize) -> Monomial {
        let mut e = self.exponents.clone();
        e.resize(n, 0);
        Monomial { exponents: e, degree: self.degree }
    }

    /// Drops the last variable (only meaningful when its exponent is zero).
    pub fn without_last(&self) -> Monomial {
        Monomial::new(self.exponents[..self.n() - 1].to_vec())
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Parses `x1^2*x3`, `1`, or `x2`.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let text = text.trim();
        let mut e = vec![0u32; n];
        if text == "1" {
            return Ok(Monomial::new(e));
        }
        for factor in text.split('*') {
            let (i, k) = parse_power(factor.trim(), n)?;
            e[i] += k;
        }
        Ok(Monomial::new(e))
    }
}

/// Parses a single `x<idx>` or `x<idx>^<k>` factor into `(zero-based idx, k)`.
pub(crate) fn parse_power(factor: &str, n: usize) -> Result<(usize, u32)> {
    let (base, exp) = match factor.split_once('^') {
        Some((b, e)) => (b.trim(), e.trim()),
        None => (factor, "1"),
    };
    let idx: usize = base
        .strip_prefix('x')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidInput(format!("bad variable `{base}`")))?;
    if idx == 0 || idx > n {
        return invalid(format!("variable x{idx} out of range for {n} variables"));
    }
    let k: u32 = exp.parse().map_err(|_| Error::InvalidInput(format!("bad exponent `{exp}`")))?;
    Ok((idx - 1, k))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Degree first, then descending lex. This is the canonical storage order of
/// generators.
pub fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| b.exponents.cmp(&a.exponents))
}

/// All monomials of degree `d` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `C(d+n-1, n-1)`, the number of degree-`d` monomials in `n` variables.
pub fn count_monomials(n: usize, d: u32) -> u64 {
    if n == 0 {
        return u64::from(d == 0);
    }
    binomial_u64(d as u64 + n as u64 - 1, n as u64 - 1)
}

pub(crate) fn binomial_u64(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for k in 0..b {
        acc = acc * (a - k) as u128 / (k + 1) as u128;
    }
    acc as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tiebreak {
    Lex,
    DegRevLex,
}

/// A monomial order. `Weighted` compares `weight . a` first (larger weight
/// wins) and falls back to the tiebreak order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    Weighted { weight: Vec<i64>, tiebreak: Tiebreak },
}

impl MonomialOrder {
    pub fn weighted(weight: Vec<i64>, tiebreak: Tiebreak) -> Self {
        MonomialOrder::Weighted { weight, tiebreak }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(a, b),
            MonomialOrder::DegRevLex => degrevlex_cmp(a, b),
            MonomialOrder::Weighted { weight, tiebreak } => {
                let wa: i64 = weight.iter().zip(&a.exponents).map(|(w, e)| w * *e as i64).sum();
                let wb: i64 = weight.iter().zip(&b.exponents).map(|(w, e)| w * *e as i64).sum();
                wa.cmp(&wb).then_with(|| match tiebreak {
                    Tiebreak::Lex => lex_cmp(a, b),
                    Tiebreak::DegRevLex => degrevlex_cmp(a, b),
                })
            }
        }
    }

    /// Weight of `m` under a weighted order, `None` for the plain orders.
    pub fn weight_of(&self, m: &Monomial) -> Option<i64> {
        match self {
            MonomialOrder::Weighted { weight, .. } => {
                Some(weight.iter().zip(&m.exponents).map(|(w, e)| w * *e as i64).sum())
            }
            _ => None,
        }
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.exponents.cmp(&b.exponents)
}

fn degrevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| {
        for (x, y) in a.exponents.iter().zip(&b.exponents).rev() {
            if x != y {
                // smaller exponent in the last differing variable is larger
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// Truncated Hilbert function `H_0..H_dmax`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(values: Vec<u64>) -> Self {
        HilbertFunction { values }
    }

    /// Hilbert function of the polynomial ring in `n` variables.
    pub fn polynomial_ring(n: usize, dmax: usize) -> Self {
        HilbertFunction::new((0..=dmax).map(|d| count_monomials(n, d as u32)).collect())
    }

    pub fn dmax(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, d: usize) -> u64 {
        self.values[d]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn truncate(&self, dmax: usize) -> HilbertFunction {
        HilbertFunction::new(self.values[..=dmax.min(self.dmax())].to_vec())
    }

    pub fn to_series(&self) -> TruncatedSeries {
        TruncatedSeries::new(self.values.iter().map(|&v| v as i64).collect())
    }
}

/// Truncated power series with integer coefficients. Unlike a Hilbert
/// function its coefficients may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TruncatedSeries {
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Multiplies by `(1-z)^r`; negative `r` divides, i.e. takes `|r|` rounds
    /// of prefix sums. The truncation degree is preserved.
    pub fn transform(&self, r: i64) -> TruncatedSeries {
        let mut c = self.coeffs.clone();
        if r >= 0 {
            for _ in 0..r {
                for d in (1..c.len()).rev() {
                    c[d] -= c[d - 1];
                }
            }
        } else {
            for _ in 0..(-r) {
                for d in 1..c.len() {
                    c[d] += c[d - 1];
                }
            }
        }
        TruncatedSeries::new(c)
    }

    pub fn to_hilbert_function(&self) -> Option<HilbertFunction> {
        self.coeffs
            .iter()
            .map(|&c| u64::try_from(c).ok())
            .collect::<Option<Vec<_>>>()
            .map(HilbertFunction::new)
    }
}

/// The truncated series transform on a Hilbert function.
pub fn series_transform(h: &HilbertFunction, r: i64) -> TruncatedSeries {
    h.to_series().transform(r)
}

/// A monomial ideal stored by its minimal generators in canonical order.
/// The zero ideal has no generators; the unit ideal is `(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    gens: Vec<Vec<u32>>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;
    fn try_from(r: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(r.n, r.gens.into_iter().map(Monomial::new).collect())
    }
}

impl From<MonomialIdeal> for IdealRepr {
    fn from(i: MonomialIdeal) -> Self {
        IdealRepr { n: i.n, gens: i.gens.into_iter().map(Vec::from).collect() }
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical total order on ideals: compare generator lists elementwise.
impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.gens.iter().zip(&other.gens) {
                let c = canonical_cmp(a, b);
                if c != Ordering::Equal {
                    return c;
                }
            }
            self.gens.len().cmp(&other.gens.len())
        })
    }
}

impl MonomialIdeal {
    /// Minimalizes `gens`; every generator must have `n` exponents.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return invalid(format!("monomial {g} has {} exponents, expected {n}", g.n()));
        }
        Ok(Self::from_gens_unchecked(n, gens))
    }

    pub(crate) fn from_gens_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_by(canonical_cmp);
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { n, gens: kept }
    }

    pub fn from_exponents(n: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(n, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        Self::from_gens_unchecked(n, (0..n).map(|i| Monomial::var(n, i)).collect())
    }

    /// `(x1, ..., xn)^d`.
    pub fn maximal_power(n: usize, d: u32) -> Self {
        Self::from_gens_unchecked(n, monomials_of_degree(n, d))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_one())
    }

    pub fn max_gen_degree(&self) -> Option<u32> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return invalid(format!("monomial {m} has {} exponents, ideal has {}", m.n(), self.n));
        }
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.n == other.n && self.gens.iter().all(|g| other.contains_unchecked(g))
    }

    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        if m.n() != self.n {
            return invalid(format!("monomial {m} has {} exponents, ideal has {}", m.n(), self.n));
        }
        Ok(Self::from_gens_unchecked(self.n, self.gens.iter().map(|g| g.colon(m)).collect()))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n);
        Self::from_gens_unchecked(self.n, self.gens.iter().chain(&other.gens).cloned().collect())
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Self::from_gens_unchecked(self.n, gens)
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.n, other.n);
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::from_gens_unchecked(self.n, gens)
    }

    /// `(I : x_i^oo)`: set the exponent of `x_i` to zero in every generator.
    pub fn saturate_variable(&self, i: usize) -> MonomialIdeal {
        Self::from_gens_unchecked(
            self.n,
            self.gens
                .iter()
                .map(|g| {
                    let mut e = g.exponents.clone();
                    e[i] = 0;
                    Monomial::new(e)
                })
                .collect(),
        )
    }

    /// `(I : m^oo)` as the intersection of the per-variable saturations.
    pub fn saturate(&self) -> MonomialIdeal {
        if self.n == 0 || self.is_zero() {
            return self.clone();
        }
        (1..self.n).fold(self.saturate_variable(0), |acc, i| acc.intersection(&self.saturate_variable(i)))
    }

    /// Pads every generator to `n` variables (extension to a larger ring).
    pub fn extend(&self, n: usize) -> MonomialIdeal {
        assert!(n >= self.n);
        Self::from_gens_unchecked(n, self.gens.iter().map(|g| g.extend(n)).collect())
    }

    /// Degree-`d` monomials not in the ideal, in descending lex order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d).into_iter().filter(|m| !self.contains_unchecked(m)).collect()
    }

    /// Degree-`d` monomials in the ideal, in descending lex order.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.n, d).into_iter().filter(|m| self.contains_unchecked(m)).collect()
    }

    /// Numerator `N(t)` of the Hilbert series `N(t) / (1-t)^n` of `A/I`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        numerator(self.n, self.gens.clone())
    }

    /// Hilbert function of `A/I` up to `dmax`.
    pub fn hilbert_function(&self, dmax: usize) -> HilbertFunction {
        let mut num = self.hilbert_numerator();
        num.resize(num.len().max(dmax + 1), 0);
        num.truncate(dmax + 1);
        TruncatedSeries::new(num)
            .transform(-(self.n as i64))
            .to_hilbert_function()
            .expect("Hilbert function of a monomial quotient is nonnegative")
    }

    /// Slices `J_[0], ..., J_[E]` in `n-1` variables, where `J_[d]` is the
    /// image of `(I : x_n^d)` at `x_n = 0` and `E` is the largest `x_n`
    /// exponent among the generators. Slices are constant from `E` on.
    pub fn slice_last_variable(&self) -> Result<Vec<MonomialIdeal>> {
        if self.n == 0 {
            return invalid("cannot slice an ideal in zero variables");
        }
        let last = self.n - 1;
        let top = self.gens.iter().map(|g| g.exponent(last)).max().unwrap_or(0);
        Ok((0..=top)
            .map(|d| {
                Self::from_gens_unchecked(
                    last,
                    self.gens.iter().filter(|g| g.exponent(last) <= d).map(|g| g.without_last()).collect(),
                )
            })
            .collect())
    }

    /// Whether `J_[k+1] * m ⊆ J_[k]` for all `0 < k+1 < e`, where `m` is the
    /// maximal ideal of the ring in the first `n-1` variables. `e = None`
    /// means `e = oo`; a finite `e` requires `x_n^e ∈ I`.
    pub fn is_xn_stable(&self, e: Option<u32>) -> Result<bool> {
        if self.n == 0 {
            return invalid("X_n-stability needs at least one variable");
        }
        if let Some(e) = e {
            if e == 0 {
                return invalid("e must be positive");
            }
            if !self.contains_unchecked(&Monomial::var_power(self.n, self.n - 1, e)) {
                return invalid(format!("x{}^{e} is not in the ideal", self.n));
            }
        }
        let slices = self.slice_last_variable()?;
        let nbar = self.n - 1;
        for k in 0..slices.len() - 1 {
            if e.is_some_and(|e| (k as u64) + 1 >= e as u64) {
                break;
            }
            let (upper, lower) = (&slices[k + 1], &slices[k]);
            for g in upper.gens() {
                for v in 0..nbar {
                    if !lower.contains_unchecked(&g.times_var(v)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Hilbert series numerator by pivoting on a shared variable:
/// `HS(A/I) = HS(A/(I + x)) + t HS(A/(I : x))`.
fn numerator(n: usize, gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let mut counts = vec![0usize; n];
    for g in &gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let (pivot, &shared) = match counts.iter().enumerate().max_by_key(|(_, c)| **c) {
        Some(x) => x,
        None => return vec![0], // n == 0 with generator 1
    };
    if shared <= 1 {
        // pairwise coprime generators: the numerator factors
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = vec![0i64; acc.len() + d];
            for (k, c) in acc.iter().enumerate() {
                next[k] += c;
                next[k + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    let x = Monomial::var(n, pivot);
    let mut plus = gens.clone();
    plus.push(x.clone());
    let plus = MonomialIdeal::from_gens_unchecked(n, plus).gens;
    let colon = MonomialIdeal::from_gens_unchecked(n, gens.iter().map(|g| g.colon(&x)).collect()).gens;
    let a = numerator(n, plus);
    let b = numerator(n, colon);
    let mut out = vec![0i64; a.len().max(b.len() + 1)];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k + 1] += c;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
