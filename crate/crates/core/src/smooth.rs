//! f-vectors of smooth polytopes from boundary counts, and the inequalities
//! they satisfy in low dimension.

use num_bigint::BigInt;

use crate::count::count_range;
use crate::ehrhart::delta_vector;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Rational};
use crate::polytope::{FVector, LatticePolytope};
use crate::reflexive::Inequality;

/// The f-vector of a smooth polytope of dimension 3, 4 or 5 from
/// `b1 = |∂P ∩ Z^d|` and `b2 = |∂(2P) ∩ Z^d|`.
pub fn smooth_f_vector(d: usize, b1: i64, b2: Option<i64>) -> Result<FVector> {
    let f = match d {
        3 => vec![b1, 3 * b1 - 6, 2 * b1 - 4],
        4 | 5 => {
            let b2 = b2.ok_or(Error::Arity { expected: 2, got: 1 })?;
            if d == 4 {
                vec![b1, b2 - b1, 2 * b2 - 4 * b1, b2 - 2 * b1]
            } else {
                vec![b1, b2 - b1, 4 * b2 - 14 * b1 + 20, 5 * b2 - 20 * b1 + 30, 2 * b2 - 8 * b1 + 12]
            }
        }
        _ => return Err(Error::Dimension { expected: 3, actual: d }),
    };
    let counts = f
        .iter()
        .map(|&x| u64::try_from(x).map_err(|_| Error::Invalid(format!("negative face count {x}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FVector::new(counts))
}

/// The relations `f_i = sum_{j >= i} (-1)^{d-1-j} C(j+1, i+1) f_j` for
/// `1 <= i <= d-2`, which hold for simplicial polytopes.
pub fn dehn_sommerville_check(f: &FVector) -> bool {
    let d = f.dim as i64;
    (1..=d - 2).all(|i| {
        let rhs: BigInt = (i..d)
            .map(|j| crate::exact::sign_pow(d - 1 - j) * binomial(j + 1, i + 1) * f.f(j))
            .sum();
        rhs == BigInt::from(f.f(i))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothReport {
    pub f_vector: FVector,
    /// From boundary counts; only in dimensions 3 to 5.
    pub formula_f_vector: Option<FVector>,
    /// `d! vol(P)`.
    pub normalized_volume: BigInt,
    /// `(d-1)! vol(∂P) = f_{d-1}`.
    pub facet_identity: bool,
    /// `|∂P ∩ Z^d| = f_0`.
    pub vertex_identity: bool,
    pub bounds: Vec<Inequality>,
}

impl SmoothReport {
    pub fn all_hold(&self) -> bool {
        self.facet_identity
            && self.vertex_identity
            && self.formula_f_vector.as_ref().is_none_or(|f| *f == self.f_vector)
            && self.bounds.iter().all(Inequality::holds)
    }
}

pub fn smooth_bounds_check(p: &LatticePolytope) -> Result<SmoothReport> {
    if !p.is_smooth() {
        return Err(Error::Precondition("polytope is not smooth".into()));
    }
    let d = p.dim();
    let di = d as i64;
    let f = p.f_vector_direct();
    let counts = count_range(p, d);
    let b1 = counts.get(1).boundary as i64;
    let b2 = counts.get(2).boundary as i64;
    let normalized_volume = delta_vector(&counts)?.sum();
    let f_top = f.f(di - 1);
    let boundary_norm = p.boundary_volume_direct() * Rational::from_integer(factorial(d as u64 - 1));

    let mut bounds = vec![
        Inequality::new("|∂P ∩ Z^d| <= 3d (d even), 3d - 1 (d odd)", b1, if d.is_multiple_of(2) { 3 * di } else { 3 * di - 1 }),
        Inequality::new("(3d - 4) f_{d-2} <= 12 f_{d-3}", (3 * di - 4) * f.f(di - 2), 12 * f.f(di - 3)),
        Inequality::new("d f_0 <= f_1 + C(d+1, 2)", di * f.f(0), BigInt::from(f.f(1)) + binomial(di + 1, 2)),
    ];
    match d {
        4 => {
            bounds.push(Inequality::new("5 b1 - 10 <= b2", 5 * b1 - 10, b2));
            bounds.push(Inequality::new("b2 <= 5 b1", b2, 5 * b1));
            bounds.push(Inequality::new("4! vol <= 3 f_0", normalized_volume.clone(), 3 * f.f(0)));
        }
        5 => {
            bounds.push(Inequality::new("42 b1 - 105 <= 7 b2", 42 * b1 - 105, 7 * b2));
            bounds.push(Inequality::new("7 b2 <= 52 b1 - 90", 7 * b2, 52 * b1 - 90));
            bounds.push(Inequality::new("7 * 5! vol <= 48 f_0 - 96", 7 * &normalized_volume, 48 * f.f(0) - 96));
        }
        _ => {}
    }
    let formula_f_vector = if (3..=5).contains(&d) { Some(smooth_f_vector(d, b1, Some(b2))?) } else { None };
    Ok(SmoothReport {
        facet_identity: boundary_norm == Rational::from_integer(BigInt::from(f_top)),
        vertex_identity: b1 == f.f(0),
        f_vector: f,
        formula_f_vector,
        normalized_volume,
        bounds,
    })
}
