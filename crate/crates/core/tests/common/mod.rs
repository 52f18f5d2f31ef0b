#![allow(dead_code)]

use latvol::count::count_range;
use latvol::ehrhart::{delta_vector, interpolate_ehrhart};
use latvol::fixtures::{centered_cube, cross_polytope, fano_simplex, free_sum, standard_simplex, unit_cube};
use latvol::LatticePolytope;
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Hull of `n` random points in `[-r, r]^d`, retried until full-dimensional.
pub fn random_polytope(rng: &mut ChaCha8Rng, d: usize, r: i64) -> LatticePolytope {
    loop {
        let n = rng.gen_range(d + 1..=d + 5);
        let points: Vec<Vec<i64>> = (0..n).map(|_| (0..d).map(|_| rng.gen_range(-r..=r)).collect()).collect();
        if let Ok(p) = LatticePolytope::hull_from_vertices(&points) {
            return p;
        }
    }
}

/// Product of random elementary integer row operations and sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * d {
        let i = rng.gen_range(0..d);
        let j = rng.gen_range(0..d);
        if i == j {
            a[i].iter_mut().for_each(|x| *x = -*x);
            continue;
        }
        let k = rng.gen_range(-1..=1);
        for c in 0..d {
            a[i][c] += k * a[j][c];
        }
    }
    a
}

/// Cubes, simplices, cross-polytopes and a few sums in dimensions 2 to 6.
pub fn boundary_fixtures() -> Vec<(String, LatticePolytope)> {
    let mut out = Vec::new();
    for d in 2..=6 {
        out.push((format!("unit cube {d}"), unit_cube(d)));
        out.push((format!("standard simplex {d}"), standard_simplex(d)));
        out.push((format!("cross-polytope {d}"), cross_polytope(d)));
    }
    for d in 2..=4 {
        out.push((format!("centered cube {d}"), centered_cube(d)));
        out.push((format!("projective simplex {d}"), fano_simplex(d)));
    }
    out.push(("square + triangle".into(), free_sum(&cross_polytope(2), &fano_simplex(2))));
    out
}

/// Reciprocity, δ non-negativity and the Lower Bound Theorem for one
/// polytope; `Err` names the first failure.
pub fn intrinsic_properties(p: &LatticePolytope) -> Result<(), String> {
    let d = p.dim();
    let counts = count_range(p, d + 1);
    let e = interpolate_ehrhart(&counts).map_err(|e| e.to_string())?;
    let sign = if d.is_multiple_of(2) { 1 } else { -1 };
    for m in 1..=d + 1 {
        let lhs = latvol::Rational::from_integer(BigInt::from(counts.get(m).interior));
        if lhs != e.eval(-(m as i64)) * latvol::Rational::from_integer(BigInt::from(sign)) {
            return Err(format!("reciprocity fails at m = {m}"));
        }
    }
    let delta = delta_vector(&counts).map_err(|e| e.to_string())?;
    if delta.entries().iter().any(|x| x < &BigInt::from(0)) {
        return Err("negative delta entry".into());
    }
    if counts.get(1).interior > 0 {
        let v = delta.entries();
        if (2..d).any(|i| v[1] > v[i]) {
            return Err(format!("lower bound theorem fails: {v:?}"));
        }
    }
    Ok(())
}

/// Counts, Ehrhart coefficients, boundary volume and f-vector agree for
/// `p` and `A p + t`.
pub fn unimodular_invariance(p: &LatticePolytope, a: &[Vec<i64>], t: &[i64]) -> Result<(), String> {
    let q = p.affine_image(a, t).map_err(|e| e.to_string())?;
    let d = p.dim();
    if count_range(p, d) != count_range(&q, d) {
        return Err("dilation counts differ".into());
    }
    let (ep, eq) = (interpolate_ehrhart(&count_range(p, d)), interpolate_ehrhart(&count_range(&q, d)));
    if ep.map_err(|e| e.to_string())? != eq.map_err(|e| e.to_string())? {
        return Err("Ehrhart polynomials differ".into());
    }
    if p.boundary_volume_direct() != q.boundary_volume_direct() {
        return Err("boundary volumes differ".into());
    }
    if p.f_vector_direct() != q.f_vector_direct() {
        return Err("f-vectors differ".into());
    }
    Ok(())
}
