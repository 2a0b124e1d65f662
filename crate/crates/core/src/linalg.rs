//! Dense linear algebra over a prime field: rank, determinant, inverse.

use crate::groebner::PrimeField;

/// Row-echelon reduction in place; returns the rank and the determinant
/// sign/scale bookkeeping needed by [`determinant`].
fn eliminate(m: &mut [Vec<u32>], field: &PrimeField) -> (usize, u32) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut det = 1u32;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else {
            det = 0;
            continue;
        };
        if piv != rank {
            m.swap(piv, rank);
            det = field.neg(det);
        }
        let pv = m[rank][c];
        det = field.mul(det, pv);
        let inv = field.inv(pv);
        for x in m[rank][c..].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if *p != 0 {
                    *x = field.sub(*x, field.mul(f, *p));
                }
            }
        }
        rank += 1;
    }
    if rank < rows {
        det = 0;
    }
    (rank, det)
}

/// Rank of a matrix given as rows (all of equal length).
pub fn rank(rows: &[Vec<u32>], field: &PrimeField) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let mut m = rows.to_vec();
    eliminate(&mut m, field).0
}

/// Rank of a sparse matrix with `cols` columns given as rows of
/// `(column, value)` entries.
pub fn sparse_rank(rows: &[Vec<(usize, u32)>], cols: usize, field: &PrimeField) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let dense: Vec<Vec<u32>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![0u32; cols];
            for &(c, x) in r {
                v[c] = field.add(v[c], x);
            }
            v
        })
        .collect();
    let mut dense = dense;
    // eliminate along the shorter side
    if dense.len() > cols {
        dense = transpose(&dense);
    }
    eliminate(&mut dense, field).0
}

pub fn transpose(m: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|c| m.iter().map(|r| r[c]).collect()).collect()
}

pub fn determinant(m: &[Vec<u32>], field: &PrimeField) -> u32 {
    assert!(m.iter().all(|r| r.len() == m.len()), "determinant of a non-square matrix");
    if m.is_empty() {
        return 1;
    }
    let mut a = m.to_vec();
    let (rank, det) = eliminate(&mut a, field);
    if rank < m.len() {
        0
    } else {
        det
    }
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<u32>], field: &PrimeField) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u32::from(i == j)));
            row
        })
        .collect();
    // pivot only inside the left block
    for c in 0..n {
        let piv = (c..n).find(|&r| aug[r][c] != 0)?;
        aug.swap(piv, c);
        let inv = field.inv(aug[c][c]);
        for x in aug[c].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = aug[c].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != c && row[c] != 0 {
                let f = row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = field.sub(*x, field.mul(f, *p));
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        let f = PrimeField::default();
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]], &f), 1);
        assert_eq!(rank(&[vec![1, 2, 3], vec![0, 1, 1]], &f), 2);
        assert_eq!(determinant(&[vec![1, 2], vec![3, 4]], &f), f.from_i64(-2));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]], &f), f.from_i64(-1));
        assert_eq!(determinant(&[vec![1, 1], vec![1, 1]], &f), 0);
        let f2 = PrimeField::new(2).unwrap();
        assert_eq!(determinant(&[vec![1, 1], vec![1, 1]], &f2), 0);
        assert_eq!(sparse_rank(&[vec![(0, 1)], vec![(0, 1)], vec![(1, 5)]], 2, &f), 2);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = PrimeField::default();
        let m = vec![vec![1, 0, 0], vec![1, 1, 0], vec![2, 3, 1]];
        let inv = inverse(&m, &f).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v = (0..3).fold(0, |acc, k| f.add(acc, f.mul(m[i][k], inv[k][j])));
                assert_eq!(v, u32::from(i == j));
            }
        }
        assert!(inverse(&[vec![1, 2], vec![2, 4]], &f).is_none());
    }
}
