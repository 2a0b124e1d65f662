use serde::{Deserialize, Serialize};

use crate::groebner::PrimeField;
use crate::linalg;

/// A finite simplicial complex on vertices `0..vertices`, stored by its
/// facets. The void complex has no facets; the complex `{∅}` has the single
/// empty facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Keeps only the inclusion-maximal sets among `faces`.
    pub fn new(vertices: usize, faces: Vec<Vec<usize>>) -> Self {
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        faces.sort();
        faces.dedup();
        let facets = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v))))
            .cloned()
            .collect();
        SimplicialComplex { vertices, facets }
    }

    pub fn void(vertices: usize) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    /// The complex of all subsets of `0..vertices` satisfying `is_face`,
    /// which must be closed under taking subsets.
    pub fn from_predicate(vertices: usize, mut is_face: impl FnMut(&[usize]) -> bool) -> Self {
        let mut faces = Vec::new();
        for mask in 0u64..(1u64 << vertices) {
            let f: Vec<usize> = (0..vertices).filter(|v| mask >> v & 1 == 1).collect();
            if is_face(&f) {
                faces.push(f);
            }
        }
        SimplicialComplex::new(vertices, faces)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// All faces grouped by cardinality (index `k` holds faces with `k` vertices).
    fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let mut all: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            for mask in 0u64..(1u64 << f.len()) {
                all.push((0..f.len()).filter(|k| mask >> k & 1 == 1).map(|k| f[k]).collect());
            }
        }
        all.sort();
        all.dedup();
        let top = all.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_size = vec![Vec::new(); top + 1];
        for f in all {
            by_size[f.len()].push(f);
        }
        by_size
    }

    /// Rank of the boundary map from faces with `k` vertices to faces with `k-1`.
    fn boundary_rank(by_size: &[Vec<Vec<usize>>], k: usize, field: &PrimeField) -> usize {
        if k == 0 || k >= by_size.len() || by_size[k].is_empty() {
            return 0;
        }
        let lower = &by_size[k - 1];
        let rows: Vec<Vec<(usize, u32)>> = by_size[k]
            .iter()
            .map(|f| {
                (0..f.len())
                    .map(|t| {
                        let mut g = f.clone();
                        g.remove(t);
                        let pos = lower.binary_search(&g).expect("complex is closed under subsets");
                        (pos, if t % 2 == 0 { 1 } else { field.neg(1) })
                    })
                    .collect()
            })
            .collect();
        linalg::sparse_rank(&rows, lower.len(), field)
    }

    /// `dim H~_i` over `field`, for `i >= -1`.
    pub fn reduced_homology(&self, i: i64, field: &PrimeField) -> u64 {
        if i < -1 || self.is_void() {
            return 0;
        }
        let by_size = self.faces_by_size();
        let k = (i + 1) as usize; // faces of dimension i have i+1 vertices
        let dim = by_size.get(k).map_or(0, Vec::len);
        (dim - Self::boundary_rank(&by_size, k, field) - Self::boundary_rank(&by_size, k + 1, field)) as u64
    }
}
