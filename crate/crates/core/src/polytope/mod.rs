//! Full-dimensional lattice polytopes with exact facet descriptions.

mod faces;
mod hull;

pub use faces::FVector;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{rank_int, IntMatrix, Rational};

/// A facet `<normal, x> <= offset`. The normal is primitive and outward.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
    /// Sorted indices into the owning polytope's vertex list.
    pub vertex_indices: Vec<usize>,
}

impl Facet {
    pub fn value(&self, x: &[i64]) -> i128 {
        self.normal.iter().zip(x).map(|(&a, &b)| a as i128 * b as i128).sum()
    }

    pub fn value_rational(&self, x: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (&a, b)| acc + b * Rational::from_integer(BigInt::from(a)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    facets: Vec<Facet>,
}

/// On-disk polytope description: `{"dim": d, "vertices": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeInput {
    pub dim: usize,
    pub vertices: Vec<Vec<i64>>,
}

impl PolytopeInput {
    pub fn build(&self) -> Result<LatticePolytope> {
        if let Some(bad) = self.vertices.iter().find(|v| v.len() != self.dim) {
            return Err(Error::Invalid(format!("vertex {bad:?} does not have {} coordinates", self.dim)));
        }
        LatticePolytope::hull_from_vertices(&self.vertices)
    }
}

impl From<&LatticePolytope> for PolytopeInput {
    fn from(p: &LatticePolytope) -> Self {
        PolytopeInput { dim: p.dim, vertices: p.vertices.clone() }
    }
}

// Coordinates are kept well inside i64 so facet values and dilations never
// overflow the i128 accumulators used downstream.
const COORD_LIMIT: i64 = 1 << 24;

impl LatticePolytope {
    /// Convex hull of a finite point set that affinely spans its ambient
    /// space. Non-extreme and repeated points are dropped.
    pub fn hull_from_vertices(points: &[Vec<i64>]) -> Result<Self> {
        let dim = points.first().map(Vec::len).ok_or_else(|| Error::Invalid("empty point set".into()))?;
        if dim == 0 {
            return Err(Error::Invalid("ambient dimension must be positive".into()));
        }
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::Invalid("points have differing dimensions".into()));
        }
        if points.iter().flatten().any(|x| x.abs() > COORD_LIMIT) {
            return Err(Error::Overflow(format!("coordinates must lie within ±{COORD_LIMIT}")));
        }
        let distinct: Vec<Vec<i64>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let raw = hull::facets_of(&distinct, dim)?;

        // a point is a vertex iff the normals of the facets through it span R^d
        let mut through: Vec<Vec<usize>> = vec![Vec::new(); distinct.len()];
        for (f, facet) in raw.iter().enumerate() {
            for &i in &facet.incident {
                through[i].push(f);
            }
        }
        let mut index_of = vec![None; distinct.len()];
        let mut vertices = Vec::new();
        for (i, fs) in through.iter().enumerate() {
            if fs.len() < dim {
                continue;
            }
            let normals = IntMatrix::from_i64_rows(&fs.iter().map(|&f| raw[f].normal.clone()).collect::<Vec<_>>())?;
            if rank_int(&normals) == dim {
                index_of[i] = Some(vertices.len());
                vertices.push(distinct[i].clone());
            }
        }

        let mut facets: Vec<Facet> = raw
            .into_iter()
            .map(|f| Facet {
                normal: f.normal,
                offset: f.offset,
                vertex_indices: f.incident.iter().filter_map(|&i| index_of[i]).collect(),
            })
            .collect();
        facets.sort();
        Ok(Self { dim, vertices, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Integer bounding box `(min, max)` per coordinate.
    pub fn bounding_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = self.vertices[0].clone();
        let mut hi = self.vertices[0].clone();
        for v in &self.vertices[1..] {
            for k in 0..self.dim {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        (lo, hi)
    }

    pub fn contains(&self, x: &[Rational], strictly: bool) -> bool {
        self.facets.iter().all(|f| {
            let v = f.value_rational(x);
            let b = Rational::from_integer(BigInt::from(f.offset));
            if strictly {
                v < b
            } else {
                v <= b
            }
        })
    }

    pub fn contains_point(&self, x: &[i64], strictly: bool) -> bool {
        self.facets.iter().all(|f| {
            let v = f.value(x);
            if strictly {
                v < f.offset as i128
            } else {
                v <= f.offset as i128
            }
        })
    }

    /// `m · P` for `m >= 1`; the facet structure carries over unchanged.
    pub fn dilate(&self, m: i64) -> Result<Self> {
        if m < 1 {
            return Err(Error::Invalid(format!("dilation factor {m} must be positive")));
        }
        let scale = |x: i64| {
            x.checked_mul(m)
                .filter(|v| v.abs() <= COORD_LIMIT)
                .ok_or_else(|| Error::Overflow(format!("dilation by {m}")))
        };
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|&x| scale(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut facets = self.facets.clone();
        for f in facets.iter_mut() {
            f.offset *= m;
        }
        Ok(Self { dim: self.dim, vertices, facets })
    }

    /// `P + t`.
    pub fn translate(&self, t: &[i64]) -> Result<Self> {
        if t.len() != self.dim {
            return Err(Error::Arity { expected: self.dim, got: t.len() });
        }
        let vertices: Vec<Vec<i64>> =
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect()).collect();
        if vertices.iter().flatten().any(|x| x.abs() > COORD_LIMIT) {
            return Err(Error::Overflow("translation leaves the coordinate range".into()));
        }
        let mut facets = self.facets.clone();
        for f in facets.iter_mut() {
            f.offset += f.value(t) as i64;
        }
        // translation by a vector preserves lexicographic order, so indices stay valid
        Ok(Self { dim: self.dim, vertices, facets })
    }

    /// Image under the affine map `x -> A x + t`, re-hulled.
    pub fn affine_image(&self, a: &[Vec<i64>], t: &[i64]) -> Result<Self> {
        let image: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| {
                a.iter()
                    .zip(t)
                    .map(|(row, ti)| row.iter().zip(v).map(|(x, y)| x * y).sum::<i64>() + ti)
                    .collect()
            })
            .collect();
        Self::hull_from_vertices(&image)
    }

    /// Origin strictly inside, i.e. every facet offset positive.
    pub fn origin_in_interior(&self) -> bool {
        self.facets.iter().all(|f| f.offset > 0)
    }

    /// `P^∨ = {u : <u, v> <= 1 for all v in P}`. Its vertices are the facet
    /// normals scaled by the reciprocal offsets.
    pub fn dual(&self) -> Result<RationalPolytope> {
        if !self.origin_in_interior() {
            return Err(Error::Position);
        }
        let points: Vec<Vec<Rational>> = self
            .facets
            .iter()
            .map(|f| {
                f.normal
                    .iter()
                    .map(|&a| Rational::new(BigInt::from(a), BigInt::from(f.offset)))
                    .collect()
            })
            .collect();
        RationalPolytope::hull_from_points(&points)
    }

    /// The origin is the only interior lattice point.
    pub fn is_fano(&self) -> bool {
        if !self.origin_in_interior() {
            return false;
        }
        crate::count::count(self, 1).interior == 1
    }

    /// Fano, simplicial, and every facet's vertices form a lattice basis.
    pub fn is_smooth(&self) -> bool {
        if !self.is_fano() {
            return false;
        }
        self.facets.iter().all(|f| {
            if f.vertex_indices.len() != self.dim {
                return false;
            }
            let rows: Vec<Vec<i64>> = f.vertex_indices.iter().map(|&i| self.vertices[i].clone()).collect();
            let m = IntMatrix::from_i64_rows(&rows).expect("square");
            crate::exact::det_int(&m).map(|d| d.abs() == BigInt::from(1)).unwrap_or(false)
        })
    }

    /// Lattice points of the polytope itself (not a dilation).
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        crate::count::lattice_points(self, 1, false)
    }
}

/// Facet of a polytope with rational vertices: primitive integer normal,
/// rational offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFacet {
    pub normal: Vec<i64>,
    pub offset: Rational,
    pub vertex_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<RationalFacet>,
}

impl RationalPolytope {
    /// Hull of rational points: clear denominators, take the lattice hull,
    /// then scale back.
    pub fn hull_from_points(points: &[Vec<Rational>]) -> Result<Self> {
        let scale = points
            .iter()
            .flatten()
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let big_scale = Rational::from_integer(scale.clone());
        let scaled: Vec<Vec<i64>> = points
            .iter()
            .map(|p| {
                p.iter()
                    .map(|x| {
                        (x * &big_scale)
                            .to_integer()
                            .to_i64()
                            .ok_or_else(|| Error::Overflow("scaled rational coordinate".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let lattice = LatticePolytope::hull_from_vertices(&scaled)?;
        let vertices = lattice
            .vertices
            .iter()
            .map(|v| v.iter().map(|&x| Rational::new(BigInt::from(x), scale.clone())).collect())
            .collect();
        let facets = lattice
            .facets
            .iter()
            .map(|f| RationalFacet {
                normal: f.normal.clone(),
                offset: Rational::new(BigInt::from(f.offset), scale.clone()),
                vertex_indices: f.vertex_indices.clone(),
            })
            .collect();
        Ok(Self { dim: lattice.dim, vertices, facets })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[RationalFacet] {
        &self.facets
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().flatten().all(|x| x.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticePolytope> {
        if !self.is_integral() {
            return None;
        }
        let points: Vec<Vec<i64>> =
            self.vertices.iter().map(|v| v.iter().map(|x| x.to_integer().to_i64().unwrap()).collect()).collect();
        LatticePolytope::hull_from_vertices(&points).ok()
    }

    pub fn dual(&self) -> Result<RationalPolytope> {
        if self.facets.iter().any(|f| !f.offset.is_positive()) {
            return Err(Error::Position);
        }
        let points: Vec<Vec<Rational>> = self
            .facets
            .iter()
            .map(|f| f.normal.iter().map(|&a| Rational::from_integer(BigInt::from(a)) / &f.offset).collect())
            .collect();
        RationalPolytope::hull_from_points(&points)
    }
}
