//! Standard polytopes used throughout the examples and tests.

use crate::polytope::LatticePolytope;

fn unit(d: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = sign;
    v
}

fn build(points: Vec<Vec<i64>>) -> LatticePolytope {
    LatticePolytope::hull_from_vertices(&points).expect("standard polytope is full-dimensional")
}

/// `[0, 1]^d`.
pub fn unit_cube(d: usize) -> LatticePolytope {
    let points = (0..1u64 << d).map(|s| (0..d).map(|k| (s >> k & 1) as i64).collect()).collect();
    build(points)
}

/// `[-1, 1]^d`, the dual of the cross-polytope.
pub fn centered_cube(d: usize) -> LatticePolytope {
    let points = (0..1u64 << d)
        .map(|s| (0..d).map(|k| if s >> k & 1 == 1 { 1 } else { -1 }).collect())
        .collect();
    build(points)
}

/// `conv{±e_1, ..., ±e_d}`.
pub fn cross_polytope(d: usize) -> LatticePolytope {
    let points = (0..d).flat_map(|i| [unit(d, i, 1), unit(d, i, -1)]).collect();
    build(points)
}

/// `conv{0, e_1, ..., e_d}`.
pub fn standard_simplex(d: usize) -> LatticePolytope {
    let mut points = vec![vec![0; d]];
    points.extend((0..d).map(|i| unit(d, i, 1)));
    build(points)
}

/// `conv{e_1, ..., e_d, -e_1 - ... - e_d}`, the reflexive simplex of
/// projective space.
pub fn fano_simplex(d: usize) -> LatticePolytope {
    let mut points: Vec<Vec<i64>> = (0..d).map(|i| unit(d, i, 1)).collect();
    points.push(vec![-1; d]);
    build(points)
}

/// `conv{e_1, ..., e_d, apex}`.
pub fn simplex_with_apex(apex: &[i64]) -> LatticePolytope {
    let d = apex.len();
    let mut points: Vec<Vec<i64>> = (0..d).map(|i| unit(d, i, 1)).collect();
    points.push(apex.to_vec());
    build(points)
}

/// Simplices with the origin as unique interior lattice point whose duals
/// have a non-integral vertex.
pub fn non_reflexive_fano() -> Vec<LatticePolytope> {
    [&[-1, -1, -2][..], &[-1, -2, -3], &[-2, -2, -3], &[-1, -2, -2, -3], &[-1, -1, -2, -3], &[-1, -1, -2, -2]]
        .into_iter()
        .map(simplex_with_apex)
        .collect()
}

/// Free sum `conv(P × {0} ∪ {0} × Q)`; both inputs should contain the
/// origin in their interior.
pub fn free_sum(p: &LatticePolytope, q: &LatticePolytope) -> LatticePolytope {
    let (dp, dq) = (p.dim(), q.dim());
    let mut points: Vec<Vec<i64>> = p
        .vertices()
        .iter()
        .map(|v| v.iter().copied().chain(std::iter::repeat_n(0, dq)).collect())
        .collect();
    points.extend(q.vertices().iter().map(|v| std::iter::repeat_n(0, dp).chain(v.iter().copied()).collect()));
    build(points)
}

/// Cartesian product `P × Q`.
pub fn product(p: &LatticePolytope, q: &LatticePolytope) -> LatticePolytope {
    let mut points = Vec::new();
    for a in p.vertices() {
        for b in q.vertices() {
            points.push(a.iter().chain(b).copied().collect());
        }
    }
    build(points)
}
