//! Face lattice, facet triangulations and lattice-normalized facet volumes.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{Facet, LatticePolytope};
use crate::exact::{
    affine_rank, det_rational, factorial, saturation_basis, solve_linear, Rational, RationalMatrix,
};

/// Face numbers `(f_0, ..., f_{d-1})`; `f_{-1} = f_d = 1` are implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    pub dim: usize,
    pub counts: Vec<u64>,
}

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        Self { dim: counts.len(), counts }
    }

    /// `f_i` for `-1 <= i <= d`.
    pub fn f(&self, i: i64) -> i64 {
        if i == -1 || i == self.dim as i64 {
            1
        } else {
            self.counts[i as usize] as i64
        }
    }

    /// Alternating sum over `-1..=d`, which Euler's relation says is zero.
    pub fn euler_sum(&self) -> i64 {
        (-1..=self.dim as i64).map(|i| crate::exact::sign_pow(i) * self.f(i)).sum()
    }

    pub fn satisfies_euler(&self) -> bool {
        self.euler_sum() == 0
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl LatticePolytope {
    fn face_dim(&self, face: &[usize]) -> usize {
        let pts: Vec<Vec<i64>> = face.iter().map(|&i| self.vertices[i].clone()).collect();
        affine_rank(&pts)
    }

    /// Facets of a face (given by sorted vertex indices and its dimension).
    fn subfacets(&self, face: &[usize], face_dim: usize) -> Vec<Vec<usize>> {
        let mut found = BTreeSet::new();
        for f in &self.facets {
            let common = intersect(face, &f.vertex_indices);
            if common.is_empty() || common.len() == face.len() || found.contains(&common) {
                continue;
            }
            if self.face_dim(&common) + 1 == face_dim {
                found.insert(common);
            }
        }
        found.into_iter().collect()
    }

    /// Pulling triangulation of a face: cone from its lexicographically
    /// smallest vertex over the triangulated facets not containing it.
    pub fn triangulate_face(&self, face: &[usize], face_dim: usize) -> Vec<Vec<usize>> {
        if face.len() == face_dim + 1 {
            return vec![face.to_vec()];
        }
        let apex = face[0];
        let mut out = Vec::new();
        for sub in self.subfacets(face, face_dim) {
            if sub.contains(&apex) {
                continue;
            }
            for simplex in self.triangulate_face(&sub, face_dim - 1) {
                let mut s = Vec::with_capacity(simplex.len() + 1);
                s.push(apex);
                s.extend(simplex);
                out.push(s);
            }
        }
        out
    }

    /// `vol_{d-1}(F) / det(aff F ∩ Z^d)`: each simplex of a triangulation of
    /// the facet is measured in coordinates of a basis of the saturated
    /// lattice parallel to the facet.
    pub fn facet_lattice_volume(&self, facet: &Facet) -> Rational {
        let d = self.dim;
        let verts = &facet.vertex_indices;
        let base = &self.vertices[verts[0]];
        let diff = |i: usize, from: &[i64]| -> Vec<BigInt> {
            self.vertices[i].iter().zip(from).map(|(a, b)| BigInt::from(a - b)).collect()
        };
        let edges: Vec<Vec<BigInt>> = verts[1..].iter().map(|&i| diff(i, base)).collect();
        let basis = saturation_basis(&edges);
        debug_assert_eq!(basis.len(), d - 1);

        let to_q = |v: &[BigInt]| -> Vec<Rational> { v.iter().cloned().map(Rational::from_integer).collect() };
        let b_rows: Vec<Vec<Rational>> = basis.iter().map(|r| to_q(r)).collect();
        let dotq = |a: &[Rational], b: &[Rational]| -> Rational {
            a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        };
        let gram = RationalMatrix::from_rows(
            b_rows.iter().map(|r| b_rows.iter().map(|s| dotq(r, s)).collect()).collect(),
        )
        .expect("square gram matrix");

        let mut total = Rational::zero();
        for simplex in self.triangulate_face(verts, d - 1) {
            let apex = &self.vertices[simplex[0]];
            let mut coords = Vec::with_capacity(d - 1);
            for &v in &simplex[1..] {
                let e = to_q(&diff(v, apex));
                let rhs: Vec<Rational> = b_rows.iter().map(|r| dotq(r, &e)).collect();
                coords.push(solve_linear(&gram, &rhs).expect("basis is independent"));
            }
            let m = RationalMatrix::from_rows(coords).expect("square");
            total += det_rational(&m).expect("square").abs();
        }
        total / Rational::from_integer(factorial(d as u64 - 1))
    }

    /// Sum of the lattice-normalized facet volumes.
    pub fn boundary_volume_direct(&self) -> Rational {
        self.facets.iter().map(|f| self.facet_lattice_volume(f)).sum()
    }

    /// All non-empty faces as vertex sets: the closure of the facets under
    /// intersection, plus the polytope itself.
    pub fn faces(&self) -> Vec<(usize, Vec<usize>)> {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
        for f in &self.facets {
            if seen.insert(f.vertex_indices.clone()) {
                queue.push_back(f.vertex_indices.clone());
            }
        }
        while let Some(face) = queue.pop_front() {
            for f in &self.facets {
                let common = intersect(&face, &f.vertex_indices);
                if !common.is_empty() && common.len() < face.len() && seen.insert(common.clone()) {
                    queue.push_back(common);
                }
            }
        }
        let mut out: Vec<(usize, Vec<usize>)> = seen.into_iter().map(|f| (self.face_dim(&f), f)).collect();
        out.push((self.dim, (0..self.vertices.len()).collect()));
        out
    }

    pub fn f_vector_direct(&self) -> FVector {
        let mut counts = vec![0u64; self.dim];
        for (k, _) in self.faces() {
            if k < self.dim {
                counts[k] += 1;
            }
        }
        FVector::new(counts)
    }

    /// Every facet is a simplex.
    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.vertex_indices.len() == self.dim)
    }
}
