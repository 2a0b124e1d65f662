use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::groebner::buchberger::{groebner_basis, normal_form};
use crate::groebner::field::PrimeField;
use crate::groebner::polynomial::Polynomial;
use crate::linalg;
use crate::monomials::{monomials_of_degree, HilbertFunction, Monomial, MonomialIdeal, MonomialOrder, Tiebreak};

/// A homogeneous ideal of `F_p[x1..xn]`.
///
/// The reduced degree-reverse-lex basis is computed on first use and then
/// shared read-only, so an `Ideal` can be queried from several threads.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr", into = "IdealRepr")]
pub struct Ideal {
    n: usize,
    field: PrimeField,
    gens: Vec<Polynomial>,
    degrevlex: OnceLock<Vec<Polynomial>>,
}

#[derive(Serialize, Deserialize)]
struct IdealRepr {
    n: usize,
    #[serde(rename = "char", default = "default_char")]
    characteristic: u32,
    gens: Vec<String>,
}

fn default_char() -> u32 {
    PrimeField::DEFAULT_CHARACTERISTIC
}

impl TryFrom<IdealRepr> for Ideal {
    type Error = Error;

    fn try_from(r: IdealRepr) -> Result<Self> {
        let field = PrimeField::new(r.characteristic)?;
        let gens = r.gens.iter().map(|g| Polynomial::parse(g, r.n, &field)).collect::<Result<Vec<_>>>()?;
        Ideal::new(r.n, field, gens)
    }
}

impl From<Ideal> for IdealRepr {
    fn from(i: Ideal) -> Self {
        IdealRepr { n: i.n, characteristic: i.field.characteristic(), gens: i.gens.iter().map(|g| g.display(&i.field)).collect() }
    }
}

impl PartialEq for Ideal {
    /// Equality as ideals (same reduced basis), not as generator lists.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.basis() == other.basis()
    }
}

impl Eq for Ideal {}

impl Ideal {
    pub fn new(n: usize, field: PrimeField, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if g.n() != n {
                return invalid(format!("generator {g} lives in {} variables, expected {n}", g.n()));
            }
            if !g.is_homogeneous() {
                return invalid(format!("generator {} is not homogeneous", g.display(&field)));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { n, field, gens, degrevlex: OnceLock::new() })
    }

    pub fn zero(n: usize, field: PrimeField) -> Self {
        Ideal { n, field, gens: Vec::new(), degrevlex: OnceLock::new() }
    }

    pub fn from_monomial_ideal(ideal: &MonomialIdeal, field: PrimeField) -> Self {
        let gens: Vec<Polynomial> = ideal.gens().iter().cloned().map(Polynomial::monomial).collect();
        let i = Ideal { n: ideal.n(), field, gens: gens.clone(), degrevlex: OnceLock::new() };
        // minimal monomial generators already form the reduced basis
        let _ = i.degrevlex.set(gens);
        i
    }

    /// Parses generators written as `x1^2 + 3*x1*x2`.
    pub fn parse(n: usize, field: PrimeField, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|g| Polynomial::parse(g, n, &field)).collect::<Result<Vec<_>>>()?;
        Ideal::new(n, field, polys)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The monomial ideal with the same generators, if all are monomials.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        if !self.gens.iter().all(Polynomial::is_monomial) {
            return None;
        }
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| g.terms()[0].0.clone()).collect()).ok()
    }

    /// The reduced degree-reverse-lex basis (cached).
    pub fn basis(&self) -> &[Polynomial] {
        self.degrevlex.get_or_init(|| groebner_basis(&self.gens, &MonomialOrder::DegRevLex, &self.field, None))
    }

    /// Reduced Gröbner basis for `order`.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Vec<Polynomial> {
        match order {
            MonomialOrder::DegRevLex => self.basis().to_vec(),
            _ => groebner_basis(&self.gens, order, &self.field, None),
        }
    }

    /// A degree-reverse-lex basis valid in degrees `<= dmax`.
    pub fn truncated_basis(&self, dmax: u32) -> Vec<Polynomial> {
        if let Some(b) = self.degrevlex.get() {
            return b.clone();
        }
        groebner_basis(&self.gens, &MonomialOrder::DegRevLex, &self.field, Some(dmax))
    }

    pub fn initial_ideal(&self, order: &MonomialOrder) -> MonomialIdeal {
        let lead = self.groebner_basis(order).iter().filter_map(|g| g.leading_term(order).map(|t| t.0.clone())).collect();
        MonomialIdeal::from_gens_unchecked(self.n, lead)
    }

    /// `in_w(I)`: generated by the `w`-initial forms of a Gröbner basis for
    /// the `w`-refined degree-reverse-lex order.
    pub fn initial_forms_ideal(&self, weight: &[i64]) -> Result<Ideal> {
        if weight.len() != self.n {
            return invalid(format!("weight vector has length {}, expected {}", weight.len(), self.n));
        }
        let order = MonomialOrder::weighted(weight.to_vec(), Tiebreak::DegRevLex);
        let forms = self
            .groebner_basis(&order)
            .iter()
            .map(|g| {
                let top = g.terms().iter().map(|(m, _)| order.weight_of(m).unwrap()).max().unwrap();
                let terms = g.terms().iter().filter(|(m, _)| order.weight_of(m) == Some(top)).cloned().collect();
                Polynomial::from_sorted_unchecked(self.n, terms)
            })
            .collect();
        Ideal::new(self.n, self.field, forms)
    }

    /// Hilbert function of `A/I` up to `dmax`, via the initial ideal.
    pub fn hilbert_function(&self, dmax: usize) -> HilbertFunction {
        if let Some(m) = self.as_monomial() {
            return m.hilbert_function(dmax);
        }
        let lead = self
            .truncated_basis(dmax as u32)
            .iter()
            .filter(|g| g.degree().unwrap() as usize <= dmax)
            .map(|g| g.leading_term(&MonomialOrder::DegRevLex).unwrap().0.clone())
            .collect();
        MonomialIdeal::from_gens_unchecked(self.n, lead).hilbert_function(dmax)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, self.basis(), &MonomialOrder::DegRevLex, &self.field)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.basis().iter().any(|g| g.degree() == Some(0))
    }

    /// Basis of `I : x_i^k` (`k = None` for the saturation), in permuted
    /// coordinates where `x_i` is the last variable, together with the
    /// permutation used.
    fn stripped_basis(&self, i: usize, k: Option<u32>) -> (Vec<usize>, Vec<Polynomial>) {
        let last = self.n - 1;
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.swap(i, last);
        let permuted: Vec<Polynomial> = self.gens.iter().map(|g| g.permute(&perm)).collect();
        // in revlex, x_n divides a basis element iff it divides its leading term
        let gb = groebner_basis(&permuted, &MonomialOrder::DegRevLex, &self.field, None);
        let stripped = gb.iter().map(|g| g.strip_variable(last, k.unwrap_or(u32::MAX))).collect();
        (perm, stripped)
    }

    /// `I : x_i^k`.
    pub fn quotient_by_variable_power(&self, i: usize, k: u32) -> Ideal {
        let (perm, stripped) = self.stripped_basis(i, Some(k));
        let gens = stripped.iter().map(|g| g.permute(&perm)).collect();
        Ideal::new(self.n, self.field, gens).expect("quotient of a homogeneous ideal is homogeneous")
    }

    /// `I : x_i^∞`.
    pub fn saturate_variable(&self, i: usize) -> Ideal {
        let (perm, stripped) = self.stripped_basis(i, None);
        let gens = stripped.iter().map(|g| g.permute(&perm)).collect();
        Ideal::new(self.n, self.field, gens).expect("saturation of a homogeneous ideal is homogeneous")
    }

    /// `I : m^∞`, as the intersection of the per-variable saturations.
    pub fn saturate(&self) -> Ideal {
        if let Some(m) = self.as_monomial() {
            return Ideal::from_monomial_ideal(&m.saturate(), self.field);
        }
        let mut acc: Option<Ideal> = None;
        for i in 0..self.n {
            let s = self.saturate_variable(i);
            if s.is_unit() {
                continue;
            }
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersection(&s),
            });
        }
        acc.unwrap_or_else(|| Ideal::new(self.n, self.field, vec![Polynomial::constant(self.n, 1)]).unwrap())
    }

    /// `I ∩ J` by eliminating `t` from `t I + (1 - t) J`.
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.n, other.n);
        let n1 = self.n + 1;
        let lift = |p: &Polynomial| p.extend(n1).permute(&rotate_right(n1));
        let t = Polynomial::monomial(Monomial::var(n1, 0));
        let one_minus_t = Polynomial::constant(n1, 1).sub(&t, &self.field);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| lift(g).mul(&t, &self.field)).collect();
        gens.extend(other.gens.iter().map(|g| lift(g).mul(&one_minus_t, &self.field)));
        let mut weight = vec![0i64; n1];
        weight[0] = 1;
        let order = MonomialOrder::weighted(weight, Tiebreak::DegRevLex);
        let gb = groebner_basis(&gens, &order, &self.field, None);
        let kept = gb
            .into_iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(0) == 0))
            .map(|g| drop_first_variable(&g))
            .collect();
        Ideal::new(self.n, self.field, kept).expect("intersection of homogeneous ideals is homogeneous")
    }

    /// Image in `F_p[x1..x_{n-1}]` under `x_n -> 0`.
    pub fn evaluate_last_at_zero(&self) -> Ideal {
        Ideal::new(self.n - 1, self.field, self.gens.iter().map(Polynomial::eval_last_at_zero).collect())
            .expect("evaluation preserves homogeneity")
    }

    /// Hilbert function of `H^0_m(A/I)` up to `dmax`, i.e.
    /// `HF(A/I) - HF(A/I^sat)`.
    pub fn h0_hilbert_function(&self, dmax: usize) -> HilbertFunction {
        let hf = self.hilbert_function(dmax);
        if let Some(m) = self.as_monomial() {
            let sat = m.saturate().hilbert_function(dmax);
            return HilbertFunction::new(hf.values().iter().zip(sat.values()).map(|(a, b)| a - b).collect());
        }
        // (I^sat)_d is the intersection of the (I : x_i^∞)_d; its codimension
        // in A_d is the rank of the stacked normal-form maps.
        let sats: Vec<(Vec<usize>, Vec<Polynomial>)> = (0..self.n).map(|i| self.stripped_basis(i, None)).collect();
        let values = (0..=dmax)
            .map(|d| {
                let monos = monomials_of_degree(self.n, d as u32);
                let mut rows: Vec<Vec<u32>> = Vec::new();
                for (perm, basis) in &sats {
                    let mut index: Vec<Monomial> = Vec::new();
                    let mut cols: Vec<Vec<(usize, u32)>> = Vec::new();
                    for m in &monos {
                        let p = Polynomial::monomial(m.clone()).permute(perm);
                        let nf = normal_form(&p, basis, &MonomialOrder::DegRevLex, &self.field);
                        let entries = nf
                            .terms()
                            .iter()
                            .map(|(t, c)| {
                                let pos = index.iter().position(|x| x == t).unwrap_or_else(|| {
                                    index.push(t.clone());
                                    index.len() - 1
                                });
                                (pos, *c)
                            })
                            .collect();
                        cols.push(entries);
                    }
                    for r in 0..index.len() {
                        let mut row = vec![0u32; monos.len()];
                        for (c, col) in cols.iter().enumerate() {
                            if let Some((_, v)) = col.iter().find(|(p, _)| *p == r) {
                                row[c] = *v;
                            }
                        }
                        rows.push(row);
                    }
                }
                let quotient_of_sat = linalg::rank(&rows, &self.field) as u64;
                hf.get(d) - quotient_of_sat
            })
            .collect();
        HilbertFunction::new(values)
    }
}

/// `x_i -> x_{i+1}` with the (zero) last variable wrapping to the front.
fn rotate_right(n: usize) -> Vec<usize> {
    (0..n).map(|i| (i + 1) % n).collect()
}

fn drop_first_variable(p: &Polynomial) -> Polynomial {
    let n = p.n() - 1;
    let terms = p.terms().iter().map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), *c)).collect();
    Polynomial::from_sorted_unchecked(n, terms)
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.display(&self.field)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// An invertible linear change of coordinates: row `j` of `matrix` holds
/// the coefficients of the image of `x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearChange {
    matrix: Vec<Vec<u32>>,
    field: PrimeField,
}

impl LinearChange {
    pub fn new(matrix: Vec<Vec<u32>>, field: PrimeField) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return invalid("linear change must be a square matrix");
        }
        let matrix: Vec<Vec<u32>> = matrix.into_iter().map(|r| r.into_iter().map(|x| x % field.characteristic()).collect()).collect();
        if linalg::determinant(&matrix, &field) == 0 {
            return invalid("linear change is singular");
        }
        Ok(LinearChange { matrix, field })
    }

    pub fn identity(n: usize, field: PrimeField) -> Self {
        let matrix = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
        LinearChange { matrix, field }
    }

    /// `x_i -> x_{perm[i]}`.
    pub fn permutation(perm: &[usize], field: PrimeField) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return invalid("not a permutation");
            }
            seen[p] = true;
        }
        let matrix = perm.iter().map(|&p| (0..n).map(|j| u32::from(j == p)).collect()).collect();
        Ok(LinearChange { matrix, field })
    }

    /// A change `g` with `g(l) = x_n` for a nonzero linear form `l`.
    pub fn sending_to_last(l: &[u32], field: PrimeField) -> Result<Self> {
        let n = l.len();
        let Some(k) = (0..n).rev().find(|&k| !l[k].is_multiple_of(field.characteristic())) else {
            return invalid("cannot send the zero form to a variable");
        };
        // h(x_n) = l, h(x_k) = x_n, other variables fixed; then g = h^{-1}
        let mut h: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
        if k != n - 1 {
            h[k] = (0..n).map(|j| u32::from(j == n - 1)).collect();
        }
        h[n - 1] = l.iter().map(|x| x % field.characteristic()).collect();
        let g = linalg::inverse(&h, &field).ok_or_else(|| Error::Internal("change of coordinates is singular".into()))?;
        LinearChange::new(g, field)
    }

    pub fn n(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn inverse(&self) -> LinearChange {
        let inv = linalg::inverse(&self.matrix, &self.field).expect("stored matrix is invertible");
        LinearChange { matrix: inv, field: self.field }
    }

    /// Image of the linear form with coefficient vector `l`.
    pub fn apply_linear(&self, l: &[u32]) -> Vec<u32> {
        let n = self.n();
        (0..n)
            .map(|j| (0..n).fold(0u32, |acc, i| self.field.add(acc, self.field.mul(l[i], self.matrix[i][j]))))
            .collect()
    }

    pub fn apply_polynomial(&self, p: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = self.matrix.iter().map(|r| Polynomial::linear(r)).collect();
        p.substitute(&images, &self.field)
    }

    pub fn apply(&self, ideal: &Ideal) -> Result<Ideal> {
        if ideal.n() != self.n() {
            return invalid("linear change and ideal have different numbers of variables");
        }
        Ideal::new(ideal.n(), ideal.field, ideal.gens.iter().map(|g| self.apply_polynomial(g)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::parse(n, PrimeField::default(), gens).unwrap()
    }

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn rejects_inhomogeneous() {
        assert!(Ideal::parse(2, PrimeField::default(), &["x1^2 + x2"]).is_err());
    }

    #[test]
    fn initial_ideal_examples() {
        let i = ideal(2, &["x1^2 - x2^2", "x1*x2"]);
        assert_eq!(i.initial_ideal(&MonomialOrder::Lex), mono(2, &[&[2, 0], &[1, 1], &[0, 3]]));
        assert_eq!(ideal(2, &["x1^2 - x2^2"]).initial_ideal(&MonomialOrder::Lex), mono(2, &[&[2, 0]]));
        let m = mono(3, &[&[2, 0, 0], &[0, 1, 1]]);
        assert_eq!(Ideal::from_monomial_ideal(&m, PrimeField::default()).initial_ideal(&MonomialOrder::Lex), m);
    }

    #[test]
    fn initial_forms_examples() {
        let f = PrimeField::default();
        let i = ideal(2, &["x1 + x2"]);
        assert_eq!(i.initial_forms_ideal(&[1, 0]).unwrap(), ideal(2, &["x1"]));
        let i = ideal(2, &["x1*x2 + x2^2"]);
        assert_eq!(i.initial_forms_ideal(&[1, 0]).unwrap(), ideal(2, &["x1*x2"]));
        assert_eq!(i.initial_forms_ideal(&[1, 0]).unwrap().field(), &f);
    }

    #[test]
    fn hilbert_function_examples() {
        let z = Ideal::zero(2, PrimeField::default());
        assert_eq!(z.hilbert_function(4).values(), &[1, 2, 3, 4, 5]);
        let i = ideal(2, &["x1^2 + x1*x2"]);
        assert_eq!(i.hilbert_function(5).values(), &[1, 2, 2, 2, 2, 2]);
        let j = ideal(3, &["x1^2 + x2*x3", "x1*x2 + x3^2", "x2^3"]);
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            assert_eq!(j.initial_ideal(&order).hilbert_function(7), j.hilbert_function(7));
        }
    }

    #[test]
    fn saturation_examples() {
        let i = ideal(2, &["x1^2", "x1*x2"]);
        assert_eq!(i.saturate(), ideal(2, &["x1"]));
        assert_eq!(i.saturate_variable(1), ideal(2, &["x1"]));
        let s = ideal(2, &["x1^2 + x1*x2"]);
        assert_eq!(s.saturate(), s);
        let art = ideal(2, &["x1^2 + x2^2", "x1*x2"]);
        assert!(art.saturate().is_unit());
        // non-monomial version of (x^2, xy) after x -> x + y
        let g = ideal(2, &["x1^2 + 2*x1*x2 + x2^2", "x1*x2 + x2^2"]);
        assert_eq!(g.saturate(), ideal(2, &["x1 + x2"]));
        assert_eq!(ideal(2, &["x1^2", "x2^3"]).quotient_by_variable_power(0, 1), ideal(2, &["x1", "x2^3"]));
    }

    #[test]
    fn intersection_examples() {
        let a = ideal(2, &["x1"]);
        let b = ideal(2, &["x2"]);
        assert_eq!(a.intersection(&b), ideal(2, &["x1*x2"]));
        let c = ideal(2, &["x1 + x2"]);
        let d = ideal(2, &["x1^2", "x2^2"]);
        let cap = c.intersection(&d);
        assert!(cap.contains_ideal(&ideal(2, &["x1^3 + x2^3", "x1^2*x2 + x1*x2^2"])));
        assert!(!cap.contains(&Polynomial::parse("x1^2 + x1*x2", 2, cap.field()).unwrap()));
        assert!(c.contains_ideal(&cap) && d.contains_ideal(&cap));
    }

    #[test]
    fn h0_examples() {
        let i = ideal(2, &["x1^2", "x1*x2"]);
        assert_eq!(i.h0_hilbert_function(4).values(), &[0, 1, 0, 0, 0]);
        let g = ideal(2, &["x1^2 + 2*x1*x2 + x2^2", "x1*x2 + x2^2"]);
        assert_eq!(g.h0_hilbert_function(4).values(), &[0, 1, 0, 0, 0]);
        let s = ideal(3, &["x1^2 + x2*x3"]);
        assert_eq!(s.h0_hilbert_function(5).values(), &[0; 6]);
        let art = ideal(2, &["x1^2 + x2^2", "x1*x2"]);
        assert_eq!(art.h0_hilbert_function(4), art.hilbert_function(4));
    }

    #[test]
    fn linear_changes() {
        let f = PrimeField::default();
        let swap = LinearChange::permutation(&[1, 0], f).unwrap();
        assert_eq!(swap.apply(&ideal(2, &["x1^2"])).unwrap(), ideal(2, &["x2^2"]));
        let shear = LinearChange::new(vec![vec![1, 0], vec![1, 1]], f).unwrap();
        assert_eq!(shear.apply(&ideal(2, &["x2^2"])).unwrap(), ideal(2, &["x1^2 + 2*x1*x2 + x2^2"]));
        assert!(LinearChange::new(vec![vec![1, 1], vec![1, 1]], f).is_err());
        let l = [3, 5, 7];
        let g = LinearChange::sending_to_last(&l, f).unwrap();
        assert_eq!(g.apply_linear(&l), vec![0, 0, 1]);
        let g = LinearChange::sending_to_last(&[1, 0, 0], f).unwrap();
        assert_eq!(g.apply_linear(&[1, 0, 0]), vec![0, 0, 1]);
        assert_eq!(g.inverse().apply_linear(&[0, 0, 1]), vec![1, 0, 0]);
    }
}
