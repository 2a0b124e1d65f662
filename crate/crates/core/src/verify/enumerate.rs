use crate::error::{Error, Result};
use crate::monomials::{Monomial, MonomialIdeal};

/// Default cap on the number of ideals an enumeration may produce.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// All monomial ideals `I ⊇ a` of the form `I = J + a` with `J` generated
/// in degrees `<= dmax`, each once, in canonical order.
///
/// The search fixes `I_0, I_1, ...` degree by degree: in degree `d` the
/// piece must contain everything generated so far and may add any subset of
/// the remaining monomials, so distinct choices give distinct ideals.
pub fn enumerate_monomial_ideals_modulo(a: &MonomialIdeal, dmax: u32, budget: usize) -> Result<Vec<MonomialIdeal>> {
    let mut out = Vec::new();
    let mut visited = 0usize;
    descend(a.clone(), 0, dmax, budget, &mut visited, &mut out)?;
    out.sort();
    out.dedup();
    Ok(out)
}

fn descend(
    current: MonomialIdeal,
    d: u32,
    dmax: u32,
    budget: usize,
    visited: &mut usize,
    out: &mut Vec<MonomialIdeal>,
) -> Result<()> {
    if d > dmax {
        *visited += 1;
        if *visited > budget {
            return Err(Error::BudgetExceeded { budget, at_least: *visited });
        }
        out.push(current);
        return Ok(());
    }
    let free: Vec<Monomial> = current.standard_monomials(d);
    if free.len() >= 63 {
        return Err(Error::BudgetExceeded { budget, at_least: budget.saturating_add(1) });
    }
    for mask in 0u64..(1u64 << free.len()) {
        let extra = (0..free.len()).filter(|&k| mask >> k & 1 == 1).map(|k| free[k].clone());
        let next = if mask == 0 { current.clone() } else { current.with_generators(extra) };
        descend(next, d + 1, dmax, budget, visited, out)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        let all = enumerate_monomial_ideals_modulo(&mono(1, &[&[2]]), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 3);
        assert!(all.contains(&mono(1, &[&[1]])) && all.contains(&MonomialIdeal::unit(1)));
        let m = MonomialIdeal::maximal(3);
        let all = enumerate_monomial_ideals_modulo(&m, 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(all, {
            let mut v = vec![m.clone(), MonomialIdeal::unit(3)];
            v.sort();
            v
        });
        let all = enumerate_monomial_ideals_modulo(&MonomialIdeal::zero(1), 1, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn enumeration_counts_and_order() {
        let sq = mono(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let all = enumerate_monomial_ideals_modulo(&sq, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let x2 = mono(3, &[&[2, 0, 0]]);
        assert_eq!(enumerate_monomial_ideals_modulo(&x2, 4, DEFAULT_BUDGET).unwrap().len(), 3266);
    }

    #[test]
    fn budget_is_enforced() {
        let err = enumerate_monomial_ideals_modulo(&MonomialIdeal::zero(3), 3, 100).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 100, .. }));
    }
}
