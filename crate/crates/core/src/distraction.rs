//! Distraction matrices of linear forms, their validation and application
//! to monomial ideals, the induced matrix modulo the last variable, and
//! polarization.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::groebner::{Ideal, LinearChange, Polynomial, PrimeField};
use crate::linalg;
use crate::monomials::{Monomial, MonomialIdeal};

/// A nonzero linear form `sum c_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    #[serde(rename = "c")]
    coeffs: Vec<u32>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return invalid("linear form with all coefficients zero");
        }
        Ok(LinearForm { coeffs })
    }

    pub fn var(n: usize, i: usize) -> Self {
        LinearForm { coeffs: (0..n).map(|j| u32::from(i == j)).collect() }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_var(&self, i: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(j, &c)| c == u32::from(i == j))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::linear(&self.coeffs)
    }
}

/// An `n x ∞` matrix of linear forms, stored as a finite prefix per row
/// whose last entry repeats forever.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct DistractionMatrix {
    n: usize,
    field: PrimeField,
    rows: Vec<Vec<LinearForm>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    #[serde(rename = "char", default = "default_char", skip_serializing_if = "is_default_char")]
    characteristic: u32,
    rows: Vec<Vec<LinearForm>>,
}

fn default_char() -> u32 {
    PrimeField::DEFAULT_CHARACTERISTIC
}

fn is_default_char(p: &u32) -> bool {
    *p == PrimeField::DEFAULT_CHARACTERISTIC
}

impl TryFrom<MatrixRepr> for DistractionMatrix {
    type Error = Error;

    fn try_from(r: MatrixRepr) -> Result<Self> {
        DistractionMatrix::new(r.n, PrimeField::new(r.characteristic)?, r.rows)
    }
}

impl From<DistractionMatrix> for MatrixRepr {
    fn from(d: DistractionMatrix) -> Self {
        MatrixRepr { n: d.n, characteristic: d.field.characteristic(), rows: d.rows }
    }
}

/// Outcome of [`DistractionMatrix::validate`]: the first selection (one
/// stored column index per row) whose forms do not span `A_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub valid: bool,
    pub failing_selection: Option<Vec<usize>>,
}

impl DistractionMatrix {
    /// Checks the shape only; see [`validate`](Self::validate) for the
    /// spanning condition.
    pub fn new(n: usize, field: PrimeField, rows: Vec<Vec<LinearForm>>) -> Result<Self> {
        if rows.len() != n {
            return invalid(format!("distraction needs {n} rows, got {}", rows.len()));
        }
        let p = field.characteristic();
        let mut reduced = Vec::with_capacity(n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.is_empty() {
                return invalid(format!("row {} is empty", i + 1));
            }
            let mut out = Vec::with_capacity(row.len());
            for form in row {
                if form.coeffs.len() != n {
                    return invalid(format!("row {} has a form with {} coefficients", i + 1, form.coeffs.len()));
                }
                out.push(LinearForm::new(form.coeffs.iter().map(|c| c % p).collect())?);
            }
            reduced.push(out);
        }
        Ok(DistractionMatrix { n, field, rows: reduced })
    }

    /// Shape check plus validation.
    pub fn new_validated(n: usize, field: PrimeField, rows: Vec<Vec<LinearForm>>) -> Result<Self> {
        let d = DistractionMatrix::new(n, field, rows)?;
        match d.validate().failing_selection {
            None => Ok(d),
            Some(sel) => invalid(format!("not a distraction: selection {sel:?} does not span the linear forms")),
        }
    }

    /// `l_ij = x_i` for all `j`.
    pub fn identity(n: usize, field: PrimeField) -> Self {
        DistractionMatrix { n, field, rows: (0..n).map(|i| vec![LinearForm::var(n, i)]).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<LinearForm>] {
        &self.rows
    }

    /// Entry `l_{i+1, j+1}` (zero-based indices), using the stabilized tail.
    pub fn entry(&self, i: usize, j: usize) -> &LinearForm {
        let row = &self.rows[i];
        &row[j.min(row.len() - 1)]
    }

    /// Every choice of one entry per row spans `A_1`. Only stored entries
    /// need to be tried, since the tail repeats the last one.
    pub fn validate(&self) -> Validation {
        let mut sel = vec![0usize; self.n];
        loop {
            let m: Vec<Vec<u32>> = (0..self.n).map(|i| self.rows[i][sel[i]].coeffs.clone()).collect();
            if linalg::determinant(&m, &self.field) == 0 {
                return Validation { valid: false, failing_selection: Some(sel) };
            }
            // odometer over selections
            let mut k = self.n;
            loop {
                if k == 0 {
                    return Validation { valid: true, failing_selection: None };
                }
                k -= 1;
                sel[k] += 1;
                if sel[k] < self.rows[k].len() {
                    break;
                }
                sel[k] = 0;
            }
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    /// `D(x^a) = prod_i prod_{j <= a_i} l_ij`.
    pub fn apply(&self, m: &Monomial) -> Polynomial {
        let mut acc = Polynomial::constant(self.n, 1);
        for (i, &a) in m.exponents().iter().enumerate() {
            for j in 0..a as usize {
                acc = acc.mul(&self.entry(i, j).to_polynomial(), &self.field);
            }
        }
        acc
    }

    /// `D(I)`, generated by the distractions of the minimal generators.
    pub fn distract_ideal(&self, ideal: &MonomialIdeal) -> Result<Ideal> {
        if ideal.n() != self.n {
            return invalid(format!("ideal in {} variables, distraction in {}", ideal.n(), self.n));
        }
        Ideal::new(self.n, self.field, ideal.gens().iter().map(|g| self.apply(g)).collect())
    }

    /// `gD`: every entry replaced by its image under `g`.
    pub fn apply_change(&self, g: &LinearChange) -> Result<DistractionMatrix> {
        if g.n() != self.n {
            return invalid("linear change and distraction have different sizes");
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|l| LinearForm::new(g.apply_linear(&l.coeffs))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        DistractionMatrix::new(self.n, self.field, rows)
    }

    /// A change of coordinates `g` with `g(l_{n1}) = x_n`, and `gD`.
    pub fn normalize_last(&self) -> Result<(LinearChange, DistractionMatrix)> {
        let g = LinearChange::sending_to_last(&self.entry(self.n - 1, 0).coeffs, self.field)?;
        let gd = self.apply_change(&g)?;
        Ok((g, gd))
    }

    /// The first `n-1` rows with `x_n` set to zero: a distraction of
    /// `K[x1..x_{n-1}]`. Requires `x_n` itself among the entries of the last
    /// row.
    pub fn induce_bar(&self) -> Result<DistractionMatrix> {
        let n = self.n;
        if n < 2 {
            return invalid("induced distraction needs at least two variables");
        }
        if !self.rows[n - 1].iter().any(|l| l.is_var(n - 1)) {
            return invalid(format!("no entry of row {n} equals x{n}; apply a change of coordinates first"));
        }
        let mut rows = Vec::with_capacity(n - 1);
        for (i, row) in self.rows[..n - 1].iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for l in row {
                let c = l.coeffs[..n - 1].to_vec();
                let form = LinearForm::new(c).map_err(|_| {
                    Error::Internal(format!("row {} of the induced matrix has a zero entry", i + 1))
                })?;
                out.push(form);
            }
            rows.push(out);
        }
        let bar = DistractionMatrix::new(n - 1, self.field, rows)?;
        if let Some(sel) = bar.validate().failing_selection {
            return Err(Error::Internal(format!("induced matrix is not a distraction (selection {sel:?})")));
        }
        Ok(bar)
    }

    /// Random distraction with `depth` stored entries per row, each of the
    /// sparse shape `a x_i + b x_k`. Resamples until valid.
    pub fn random<R: Rng>(n: usize, depth: usize, field: PrimeField, rng: &mut R) -> Self {
        let p = field.characteristic();
        let depth = depth.max(1);
        loop {
            let rows = (0..n)
                .map(|i| {
                    (0..depth)
                        .map(|_| {
                            let mut c = vec![0u32; n];
                            c[i] = rng.gen_range(1..p);
                            let k = rng.gen_range(0..n);
                            c[k] = field.add(c[k], rng.gen_range(0..p));
                            if c.iter().all(|&x| x == 0) {
                                c[i] = 1;
                            }
                            LinearForm { coeffs: c }
                        })
                        .collect()
                })
                .collect();
            let d = DistractionMatrix { n, field, rows };
            if d.is_valid() {
                return d;
            }
        }
    }
}

/// The polarization `P(a)` of a monomial ideal in
/// `T = A[X_11..X_1r_1, ..., X_n1..X_nr_n]`, with the two specializations
/// back to `A`.
///
/// Variables of `T` are numbered `x1..xn` followed by the `X_ij` row by row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationResult {
    pub n: usize,
    pub r: Vec<u32>,
    pub extended_n: usize,
    pub polarized: MonomialIdeal,
    pub variables: Vec<String>,
}

impl PolarizationResult {
    /// Index of `X_ij` (zero-based `i`, `j`) in `T`.
    pub fn var_index(&self, i: usize, j: usize) -> usize {
        self.n + self.r[..i].iter().sum::<u32>() as usize + j
    }

    pub fn total_r(&self) -> u32 {
        self.r.iter().sum()
    }

    /// The relations `x_i - X_ij` as polynomials of `T`.
    pub fn specialization_x(&self, field: &PrimeField) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.r[i] as usize {
                let xi = Polynomial::monomial(Monomial::var(self.extended_n, i));
                let xij = Polynomial::monomial(Monomial::var(self.extended_n, self.var_index(i, j)));
                out.push(xi.sub(&xij, field));
            }
        }
        out
    }

    /// The relations `l_ij - X_ij` as polynomials of `T`.
    pub fn specialization_l(&self, d: &DistractionMatrix) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.r[i] as usize {
                let l = d.entry(i, j).to_polynomial().extend(self.extended_n);
                let xij = Polynomial::monomial(Monomial::var(self.extended_n, self.var_index(i, j)));
                out.push(l.sub(&xij, d.field()));
            }
        }
        out
    }

    /// `P(a)` modulo the relations `x_i - X_ij`: recovers `a`.
    pub fn specialize_x(&self) -> MonomialIdeal {
        let gens = self
            .polarized
            .gens()
            .iter()
            .map(|g| {
                let e = (0..self.n)
                    .map(|i| {
                        g.exponent(i) + (0..self.r[i] as usize).map(|j| g.exponent(self.var_index(i, j))).sum::<u32>()
                    })
                    .collect();
                Monomial::new(e)
            })
            .collect();
        MonomialIdeal::new(self.n, gens).expect("specialization stays in n variables")
    }

    /// `P(a)` modulo the relations `l_ij - X_ij`: recovers `D(a)`
    /// generator by generator.
    pub fn specialize_l(&self, d: &DistractionMatrix) -> Result<Ideal> {
        if d.n() != self.n {
            return invalid("distraction size does not match");
        }
        let mut images: Vec<Polynomial> = (0..self.n).map(|i| Polynomial::monomial(Monomial::var(self.n, i))).collect();
        for i in 0..self.n {
            for j in 0..self.r[i] as usize {
                images.push(d.entry(i, j).to_polynomial());
            }
        }
        let gens = self.polarized.gens().iter().map(|g| Polynomial::monomial(g.clone()).substitute(&images, d.field())).collect();
        Ideal::new(self.n, *d.field(), gens)
    }
}

/// Polarization of a monomial ideal.
pub fn polarize(ideal: &MonomialIdeal) -> PolarizationResult {
    let n = ideal.n();
    let r: Vec<u32> = (0..n).map(|i| ideal.gens().iter().map(|g| g.exponent(i)).max().unwrap_or(0)).collect();
    let extended_n = n + r.iter().sum::<u32>() as usize;
    let mut variables: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    for (i, &ri) in r.iter().enumerate() {
        for j in 1..=ri {
            variables.push(format!("X{}_{j}", i + 1));
        }
    }
    let mut result = PolarizationResult { n, r, extended_n, polarized: MonomialIdeal::zero(extended_n), variables };
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; extended_n];
            for i in 0..n {
                for j in 0..g.exponent(i) as usize {
                    e[result.var_index(i, j)] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    result.polarized = MonomialIdeal::new(extended_n, gens).expect("polarized generators are well formed");
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomials::series_transform;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn form(c: &[u32]) -> LinearForm {
        LinearForm::new(c.to_vec()).unwrap()
    }

    fn mono(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens).unwrap()
    }

    fn f() -> PrimeField {
        PrimeField::default()
    }

    #[test]
    fn validation_examples() {
        assert!(DistractionMatrix::identity(3, f()).is_valid());
        let bad = DistractionMatrix::new(2, f(), vec![vec![form(&[0, 1])], vec![form(&[0, 1])]]).unwrap();
        assert_eq!(bad.validate().failing_selection, Some(vec![0, 0]));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let d = DistractionMatrix::random(3, 4, f(), &mut rng);
        assert!(d.is_valid());
        // (x, x+y) / (y, x): the selection (x+y, x) spans, (x, x) does not
        let m = DistractionMatrix::new(2, f(), vec![vec![form(&[1, 0]), form(&[1, 1])], vec![form(&[0, 1]), form(&[1, 0])]]).unwrap();
        assert_eq!(m.validate().failing_selection, Some(vec![0, 1]));
    }

    #[test]
    fn json_roundtrip() {
        let text = r#"{"n":2,"rows":[[{"c":[1,0]},{"c":[1,1]}],[{"c":[0,1]}]]}"#;
        let d: DistractionMatrix = serde_json::from_str(text).unwrap();
        assert_eq!(d.entry(0, 5), &form(&[1, 1]));
        assert_eq!(serde_json::to_string(&d).unwrap(), text);
        assert!(serde_json::from_str::<DistractionMatrix>(r#"{"n":2,"rows":[[{"c":[0,0]}],[{"c":[0,1]}]]}"#).is_err());
    }

    #[test]
    fn apply_examples() {
        let d = DistractionMatrix::new(2, f(), vec![vec![form(&[1, 0]), form(&[1, 1])], vec![form(&[0, 1])]]).unwrap();
        assert_eq!(d.apply(&Monomial::one(2)), Polynomial::constant(2, 1));
        assert_eq!(d.apply(&Monomial::new(vec![2, 0])), Polynomial::parse("x1^2 + x1*x2", 2, &f()).unwrap());
        assert_eq!(d.apply(&Monomial::new(vec![1, 1])), Polynomial::parse("x1*x2", 2, &f()).unwrap());
        let i = mono(2, &[&[2, 0]]);
        assert_eq!(d.distract_ideal(&i).unwrap(), Ideal::parse(2, f(), &["x1^2 + x1*x2"]).unwrap());
        let id = DistractionMatrix::identity(2, f());
        assert_eq!(id.distract_ideal(&i).unwrap(), Ideal::from_monomial_ideal(&i, f()));
    }

    #[test]
    fn distraction_preserves_hilbert_function() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let i = mono(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 1], &[0, 0, 4]]);
        for _ in 0..5 {
            let d = DistractionMatrix::random(3, 4, f(), &mut rng);
            assert_eq!(d.distract_ideal(&i).unwrap().hilbert_function(8), i.hilbert_function(8));
        }
    }

    #[test]
    fn induce_bar_examples() {
        assert_eq!(DistractionMatrix::identity(3, f()).induce_bar().unwrap(), DistractionMatrix::identity(2, f()));
        let d = DistractionMatrix::new(
            3,
            f(),
            vec![vec![form(&[1, 0, 0]), form(&[1, 0, 1])], vec![form(&[0, 1, 1])], vec![form(&[0, 0, 1])]],
        )
        .unwrap();
        let bar = d.induce_bar().unwrap();
        assert_eq!(bar.entry(0, 0), &form(&[1, 0]));
        assert_eq!(bar.entry(0, 3), &form(&[1, 0]));
        assert_eq!(bar.entry(1, 0), &form(&[0, 1]));
        let wrong = DistractionMatrix::new(2, f(), vec![vec![form(&[0, 1])], vec![form(&[1, 0])]]).unwrap();
        assert!(matches!(wrong.induce_bar(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn normalize_then_induce() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let d = DistractionMatrix::random(3, 3, f(), &mut rng);
        let (_, gd) = d.normalize_last().unwrap();
        assert!(gd.is_valid());
        assert!(gd.entry(2, 0).is_var(2));
        assert!(gd.induce_bar().unwrap().is_valid());
    }

    #[test]
    fn polarization_examples() {
        let sq = mono(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let p = polarize(&sq);
        assert_eq!(p.r, vec![1, 1, 1]);
        assert_eq!(p.extended_n, 6);
        assert_eq!(p.polarized, mono(6, &[&[0, 0, 0, 1, 1, 0], &[0, 0, 0, 0, 1, 1]]));
        let p = polarize(&mono(1, &[&[2]]));
        assert_eq!(p.polarized, mono(3, &[&[0, 1, 1]]));
        let i = mono(2, &[&[2, 0], &[1, 1]]);
        let p = polarize(&i);
        assert_eq!(p.r, vec![2, 1]);
        assert_eq!(p.variables, vec!["x1", "x2", "X1_1", "X1_2", "X2_1"]);
        assert_eq!(p.polarized, mono(5, &[&[0, 0, 1, 1, 0], &[0, 0, 1, 0, 1]]));
        assert_eq!(p.specialize_x(), i);
        let d = DistractionMatrix::random(2, 3, f(), &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(p.specialize_l(&d).unwrap(), d.distract_ideal(&i).unwrap());
        assert_eq!(p.specialization_x(&f()).len(), 3);
        // Hilbert series of T/P(a) is that of A/a divided by (1-z)^r
        let lhs = p.polarized.hilbert_function(6);
        let rhs = series_transform(&i.hilbert_function(6), -(p.total_r() as i64));
        assert_eq!(rhs.to_hilbert_function().unwrap(), lhs);
    }
}
