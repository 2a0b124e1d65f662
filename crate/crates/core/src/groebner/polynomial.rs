use std::collections::BTreeMap;
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::groebner::field::PrimeField;
use crate::monomials::{parse_power, Monomial, MonomialOrder};

/// Sparse polynomial over a prime field. Terms are kept in descending lex
/// order with no zero coefficients, so equal polynomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: u32) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn term(m: Monomial, c: u32) -> Self {
        let n = m.n();
        if c == 0 {
            Polynomial { n, terms: Vec::new() }
        } else {
            Polynomial { n, terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[u32]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, &c)| (Monomial::var(n, i), c))
            .collect();
        Polynomial { n, terms }
    }

    /// Collects like terms and drops zeros. Coefficients are taken mod `p`.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, i64)>, field: &PrimeField) -> Self {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.n(), n);
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, field.from_i64(c));
        }
        Self::from_map(n, acc)
    }

    fn from_map(n: usize, acc: BTreeMap<Monomial, u32>) -> Self {
        Polynomial { n, terms: acc.into_iter().rev().filter(|(_, c)| *c != 0).collect() }
    }

    /// Builds from terms already sorted in descending lex order and nonzero.
    pub(crate) fn from_sorted_unchecked(n: usize, terms: Vec<(Monomial, u32)>) -> Self {
        Polynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&(Monomial, u32)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|(t, _)| t == m).map_or(0, |(_, c)| *c)
    }

    pub fn add(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        self.combine(other, field, false)
    }

    pub fn sub(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        self.combine(other, field, true)
    }

    fn combine(&self, other: &Polynomial, field: &PrimeField, negate: bool) -> Polynomial {
        assert_eq!(self.n, other.n);
        let mut acc: BTreeMap<Monomial, u32> = self.terms.iter().cloned().collect();
        for (m, c) in &other.terms {
            let c = if negate { field.neg(*c) } else { *c };
            let e = acc.entry(m.clone()).or_insert(0);
            *e = field.add(*e, c);
        }
        Self::from_map(self.n, acc)
    }

    pub fn scale(&self, c: u32, field: &PrimeField) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // multiplication by a monomial preserves lex order
        Polynomial { n: self.n, terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial, field: &PrimeField) -> Polynomial {
        assert_eq!(self.n, other.n);
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = acc.entry(a.mul(b)).or_insert(0);
                *e = field.add(*e, field.mul(*ca, *cb));
            }
        }
        Self::from_map(self.n, acc)
    }

    pub fn pow(&self, k: u32, field: &PrimeField) -> Polynomial {
        (0..k).fold(Polynomial::constant(self.n, 1), |acc, _| acc.mul(self, field))
    }

    /// Substitutes `x_k -> images[k]`. The images may live in a different
    /// number of variables than `self`.
    pub fn substitute(&self, images: &[Polynomial], field: &PrimeField) -> Polynomial {
        assert_eq!(images.len(), self.n);
        let target_n = images.first().map_or(0, |p| p.n);
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::constant(p.n, 1)]).collect();
        let mut acc = Polynomial::zero(target_n);
        for (m, c) in &self.terms {
            let mut prod = Polynomial::constant(target_n, *c);
            for (k, &e) in m.exponents().iter().enumerate() {
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul(&images[k], field);
                    powers[k].push(next);
                }
                if e > 0 {
                    prod = prod.mul(&powers[k][e as usize], field);
                }
            }
            acc = acc.add(&prod, field);
        }
        acc
    }

    /// Sets the last variable to zero and drops it.
    pub fn eval_last_at_zero(&self) -> Polynomial {
        let last = self.n - 1;
        Polynomial {
            n: last,
            terms: self.terms.iter().filter(|(m, _)| m.exponent(last) == 0).map(|(m, c)| (m.without_last(), *c)).collect(),
        }
    }

    /// Renames variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Polynomial {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0; self.n];
            for (i, &x) in m.exponents().iter().enumerate() {
                e[perm[i]] = x;
            }
            acc.insert(Monomial::new(e), *c);
        }
        Self::from_map(self.n, acc)
    }

    /// Embeds into `n + extra` variables, new variables appended.
    pub fn extend(&self, n: usize) -> Polynomial {
        Polynomial { n, terms: self.terms.iter().map(|(m, c)| (m.extend(n), *c)).collect() }
    }

    /// Divides by `x_i^k` where `k` is the largest power dividing every term,
    /// capped at `cap`.
    pub fn strip_variable(&self, i: usize, cap: u32) -> Polynomial {
        let k = self.terms.iter().map(|(m, _)| m.exponent(i)).min().unwrap_or(0).min(cap);
        if k == 0 {
            return self.clone();
        }
        let d = Monomial::var_power(self.n, i, k);
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.colon(&d), *c)).collect() }
    }

    /// Parses `x1^2 + 3*x1*x2 - x2`.
    pub fn parse(text: &str, n: usize, field: &PrimeField) -> Result<Polynomial> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return invalid("empty polynomial");
        }
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut sign = 1i64;
        let flush = |s: &str, sign: i64, terms: &mut Vec<(Monomial, i64)>| -> Result<()> {
            if s.is_empty() {
                return invalid(format!("dangling sign in `{text}`"));
            }
            let mut coeff = sign;
            let mut e = vec![0u32; n];
            for factor in s.split('*') {
                if factor.starts_with('x') {
                    let (i, k) = parse_power(factor, n)?;
                    e[i] += k;
                } else {
                    let c: i64 = factor.parse().map_err(|_| Error::InvalidInput(format!("bad factor `{factor}`")))?;
                    coeff *= c.rem_euclid(field.characteristic() as i64);
                    coeff = coeff.rem_euclid(field.characteristic() as i64);
                }
            }
            terms.push((Monomial::new(e), coeff));
            Ok(())
        };
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && !(k > 0 && compact[..k].ends_with('^')) {
                if !current.is_empty() || k > 0 {
                    flush(&current, sign, &mut terms)?;
                }
                current.clear();
                sign = if ch == '-' { -1 } else { 1 };
            } else {
                current.push(ch);
            }
        }
        flush(&current, sign, &mut terms)?;
        Ok(Polynomial::from_terms(n, terms, field))
    }

    /// Formats with coefficients in the symmetric range `(-p/2, p/2]`.
    pub fn display(&self, field: &PrimeField) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let p = field.characteristic();
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if *c > p / 2 { (true, p - c) } else { (false, *c) };
            match (k, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{mag}*{m}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&PrimeField::default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let f = PrimeField::default();
        let p = Polynomial::parse("x1^2 + 3*x1*x2", 2, &f).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.display(&f), "x1^2 + 3*x1*x2");
        let q = Polynomial::parse("-x2^2 + x1^2 - 2", 2, &f).unwrap();
        assert_eq!(q.display(&f), "x1^2 - x2^2 - 2");
        assert!(Polynomial::parse("x3", 2, &f).is_err());
        assert!(Polynomial::parse("x1 +", 2, &f).is_err());
        assert!(Polynomial::parse("x1 - x1", 2, &f).unwrap().is_zero());
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::default();
        let x = Polynomial::linear(&[1, 0]);
        let xy = Polynomial::linear(&[1, 1]);
        let p = x.mul(&xy, &f);
        assert_eq!(p, Polynomial::parse("x1^2 + x1*x2", 2, &f).unwrap());
        assert!(p.is_homogeneous());
        assert_eq!(xy.pow(2, &f), Polynomial::parse("x1^2+2*x1*x2+x2^2", 2, &f).unwrap());
        assert!(p.sub(&p, &f).is_zero());
    }

    #[test]
    fn substitution() {
        let f = PrimeField::default();
        let y2 = Polynomial::parse("x2^2", 2, &f).unwrap();
        let images = [Polynomial::linear(&[1, 0]), Polynomial::linear(&[1, 1])];
        assert_eq!(y2.substitute(&images, &f), Polynomial::parse("(x1+x2)".replace(['(', ')'], "").as_str(), 2, &f).unwrap().pow(2, &f));
    }

    #[test]
    fn last_variable_helpers() {
        let f = PrimeField::default();
        let p = Polynomial::parse("x1*x3 + x2^2 + x3^2", 3, &f).unwrap();
        assert_eq!(p.eval_last_at_zero(), Polynomial::parse("x2^2", 2, &f).unwrap());
        let q = Polynomial::parse("x1*x3^2 + x3^3", 2 + 1, &f).unwrap();
        assert_eq!(q.strip_variable(2, 5), Polynomial::parse("x1 + x3", 3, &f).unwrap());
        assert_eq!(q.strip_variable(2, 1), Polynomial::parse("x1*x3 + x3^2", 3, &f).unwrap());
    }
}
