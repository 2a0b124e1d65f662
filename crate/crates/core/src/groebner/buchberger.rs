//! Division and Buchberger's algorithm on sparse polynomials.
//!
//! Internally a polynomial is a vector of terms sorted *ascending* in the
//! active monomial order, so the leading term is the last element and can be
//! popped cheaply during reduction.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::groebner::field::PrimeField;
use crate::groebner::polynomial::Polynomial;
use crate::monomials::{canonical_cmp, Monomial, MonomialOrder};

type Terms = Vec<(Monomial, u32)>;

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t = p.terms().to_vec();
    t.sort_by(|a, b| order.cmp(&a.0, &b.0));
    t
}

fn from_terms(n: usize, mut t: Terms) -> Polynomial {
    t.sort_by(|a, b| b.0.cmp(&a.0));
    Polynomial::from_sorted_unchecked(n, t)
}

/// `f - c * m * g`, both inputs ascending in `order`.
fn sub_scaled(f: &[(Monomial, u32)], c: u32, m: &Monomial, g: &[(Monomial, u32)], order: &MonomialOrder, field: &PrimeField) -> Terms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let shift = |j: usize| (g[j].0.mul(m), field.neg(field.mul(g[j].1, c)));
    let (mut i, mut j) = (0, 0);
    let mut cur = (!g.is_empty()).then(|| shift(0));
    while let Some(gt) = cur.take() {
        if i < f.len() {
            match order.cmp(&f[i].0, &gt.0) {
                Ordering::Less => {
                    out.push(f[i].clone());
                    i += 1;
                    cur = Some(gt);
                    continue;
                }
                Ordering::Equal => {
                    let s = field.add(f[i].1, gt.1);
                    if s != 0 {
                        out.push((gt.0, s));
                    }
                    i += 1;
                }
                Ordering::Greater => out.push(gt),
            }
        } else {
            out.push(gt);
        }
        j += 1;
        cur = (j < g.len()).then(|| shift(j));
    }
    out.extend_from_slice(&f[i..]);
    out
}

fn make_monic(t: &mut Terms, field: &PrimeField) {
    if let Some(&(_, lc)) = t.last() {
        if lc != 1 {
            let inv = field.inv(lc);
            for term in t.iter_mut() {
                term.1 = field.mul(term.1, inv);
            }
        }
    }
}

/// Full reduction of `f` by `basis`; every element of `basis` must be
/// nonzero. Returns the remainder, ascending.
fn reduce(mut f: Terms, basis: &[Terms], order: &MonomialOrder, field: &PrimeField) -> Terms {
    let mut rem: Terms = Vec::new();
    while let Some((lm, lc)) = f.last().cloned() {
        let divisor = basis.iter().find(|g| g.last().unwrap().0.divides(&lm));
        match divisor {
            Some(g) => {
                let (glm, glc) = g.last().unwrap();
                let q = lm.colon(glm);
                let c = field.mul(lc, field.inv(*glc));
                f = sub_scaled(&f, c, &q, g, order, field);
            }
            None => {
                f.pop();
                rem.push((lm, lc));
            }
        }
    }
    rem.reverse();
    rem
}

/// Remainder of `f` under multivariate division by `basis`: no term of the
/// result is divisible by a leading term of `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder, field: &PrimeField) -> Polynomial {
    let g: Vec<Terms> = basis.iter().filter(|p| !p.is_zero()).map(|p| to_terms(p, order)).collect();
    from_terms(f.n(), reduce(to_terms(f, order), &g, order, field))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// With `max_degree = Some(d)` and homogeneous input, S-pairs whose lcm has
/// degree above `d` are skipped: the result is then a Gröbner basis of the
/// ideal in degrees `<= d` only. Pairs are processed in the normal strategy
/// (smallest lcm first), which makes the output deterministic; the result is
/// monic, inter-reduced and sorted canonically by leading monomial.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder, field: &PrimeField, max_degree: Option<u32>) -> Vec<Polynomial> {
    let n = match gens.first() {
        Some(g) => g.n(),
        None => return Vec::new(),
    };
    let mut basis: Vec<Terms> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let add = |t: Terms, basis: &mut Vec<Terms>, pending: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        basis.push(t);
        for i in 0..k {
            pending.insert((i, k));
        }
    };
    for g in gens {
        let mut t = reduce(to_terms(g, order), &basis, order, field);
        if !t.is_empty() {
            make_monic(&mut t, field);
            add(t, &mut basis, &mut pending);
        }
    }
    let lead = |basis: &[Terms], i: usize| basis[i].last().unwrap().0.clone();
    loop {
        // normal strategy: smallest lcm (degree first, then the order)
        let next = pending
            .iter()
            .map(|&(i, j)| (lead(&basis, i).lcm(&lead(&basis, j)), i, j))
            .min_by(|a, b| {
                a.0.degree().cmp(&b.0.degree()).then_with(|| order.cmp(&a.0, &b.0)).then_with(|| (a.1, a.2).cmp(&(b.1, b.2)))
            });
        let Some((lcm, i, j)) = next else { break };
        pending.remove(&(i, j));
        if max_degree.is_some_and(|d| lcm.degree() > d) {
            continue;
        }
        let (li, lj) = (lead(&basis, i), lead(&basis, j));
        if li.gcd(&lj).is_one() {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis, k).divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let qi = lcm.colon(&li);
        let si: Terms = basis[i].iter().map(|(t, a)| (t.mul(&qi), *a)).collect();
        let s = sub_scaled(&si, 1, &lcm.colon(&lj), &basis[j], order, field);
        let mut r = reduce(s, &basis, order, field);
        if !r.is_empty() {
            make_monic(&mut r, field);
            add(r, &mut basis, &mut pending);
        }
    }
    reduce_basis(n, basis, order, field)
}

fn reduce_basis(n: usize, basis: Vec<Terms>, order: &MonomialOrder, field: &PrimeField) -> Vec<Polynomial> {
    let leads: Vec<Monomial> = basis.iter().map(|t| t.last().unwrap().0.clone()).collect();
    let minimal: Vec<Terms> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !leads.iter().enumerate().any(|(k, lk)| k != *i && lk.divides(&leads[*i]) && (lk != &leads[*i] || k < *i))
        })
        .map(|(_, t)| t.clone())
        .collect();
    let mut out: Vec<Terms> = Vec::with_capacity(minimal.len());
    for (i, t) in minimal.iter().enumerate() {
        let mut t = t.clone();
        let top = t.pop().unwrap();
        let others: Vec<Terms> = minimal.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let mut tail = reduce(t, &others, order, field);
        tail.push(top);
        make_monic(&mut tail, field);
        out.push(tail);
    }
    out.sort_by(|a, b| canonical_cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    out.into_iter().map(|t| from_terms(n, t)).collect()
}

/// Leading monomial of a nonzero polynomial under `order`.
pub fn leading_monomial(p: &Polynomial, order: &MonomialOrder) -> Option<Monomial> {
    p.leading_term(order).map(|(m, _)| m.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Polynomial {
        Polynomial::parse(s, n, &PrimeField::default()).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let f = PrimeField::default();
        let lex = MonomialOrder::Lex;
        assert_eq!(normal_form(&p("x1^2", 2), &[p("x1^2 - x2^2", 2)], &lex, &f), p("x2^2", 2));
        assert_eq!(normal_form(&p("x2", 2), &[p("x1^2 - x2^2", 2)], &lex, &f), p("x2", 2));
        // x^2 y -> y^3 via x^2 - y^2, then y^3 is irreducible by {x^2, xy}
        let g = [p("x1^2 - x2^2", 2), p("x1*x2 - x2^2", 2)];
        assert_eq!(normal_form(&p("x1^2*x2", 2), &g, &lex, &f), p("x2^3", 2));
    }

    #[test]
    fn buchberger_examples() {
        let f = PrimeField::default();
        let lex = MonomialOrder::Lex;
        let gb = groebner_basis(&[p("x1^2 - x2^2", 2), p("x1*x2", 2)], &lex, &f, None);
        assert_eq!(gb, vec![p("x1^2 - x2^2", 2), p("x1*x2", 2), p("x2^3", 2)]);
        let gb = groebner_basis(&[p("3*x1^2 + 6*x1*x2", 2)], &lex, &f, None);
        assert_eq!(gb, vec![p("x1^2 + 2*x1*x2", 2)]);
        let gb = groebner_basis(&[p("x1^2", 2), p("x1*x2", 2), p("x1^3", 2)], &MonomialOrder::DegRevLex, &f, None);
        assert_eq!(gb, vec![p("x1^2", 2), p("x1*x2", 2)]);
    }

    #[test]
    fn truncated_basis_agrees_in_low_degree() {
        let f = PrimeField::default();
        let gens = [p("x1^2 + x2*x3", 3), p("x1*x2 + x3^2", 3), p("x2^3 + x1*x3^2", 3)];
        let full = groebner_basis(&gens, &MonomialOrder::DegRevLex, &f, None);
        let trunc = groebner_basis(&gens, &MonomialOrder::DegRevLex, &f, Some(4));
        let low = |v: &[Polynomial]| -> Vec<Polynomial> { v.iter().filter(|g| g.degree().unwrap() <= 4).cloned().collect() };
        assert_eq!(low(&full), low(&trunc));
        for g in &gens {
            assert!(normal_form(g, &full, &MonomialOrder::DegRevLex, &f).is_zero());
        }
    }
}
