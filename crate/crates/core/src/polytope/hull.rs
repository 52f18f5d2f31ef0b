//! Exact facet enumeration by the double description method.
//!
//! A facet `<a, x> <= b` of `conv(V)` is an extreme ray `(a, b)` of the cone
//! `{(a, b) : <a, v> - b <= 0 for all v in V}`. Rays are kept as primitive
//! big-integer vectors; adjacency uses the combinatorial zero-set test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{rank_int, solve_linear, IntMatrix, Rational, RationalMatrix};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    coords: Vec<BigInt>,
    zeros: Bits,
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Raw facet data: primitive normal, offset, and the indices of the input
/// points lying on the facet.
pub(crate) struct RawFacet {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub incident: Vec<usize>,
}

/// Picks `d + 1` affinely independent points greedily, or reports the
/// affine dimension actually spanned.
fn affine_basis(points: &[Vec<i64>], d: usize) -> Result<Vec<usize>> {
    let mut chosen = vec![0usize];
    let mut diffs: Vec<Vec<BigInt>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        if chosen.len() == d + 1 {
            break;
        }
        let diff: Vec<BigInt> = p.iter().zip(&points[0]).map(|(a, b)| BigInt::from(a - b)).collect();
        diffs.push(diff);
        let m = IntMatrix::from_rows(diffs.clone()).expect("rectangular");
        if rank_int(&m) == diffs.len() {
            chosen.push(i);
        } else {
            diffs.pop();
        }
    }
    if chosen.len() < d + 1 {
        return Err(Error::Dimension { expected: d, actual: chosen.len() - 1 });
    }
    Ok(chosen)
}

/// Facets of the convex hull of `points` (distinct, full-dimensional).
pub(crate) fn facets_of(points: &[Vec<i64>], d: usize) -> Result<Vec<RawFacet>> {
    let n = points.len();
    let constraints: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| p.iter().map(|&x| BigInt::from(x)).chain(std::iter::once(BigInt::from(-1))).collect())
        .collect();

    let basis = affine_basis(points, d)?;
    let c0 = RationalMatrix::from_rows(
        basis.iter().map(|&i| constraints[i].iter().cloned().map(Rational::from_integer).collect()).collect(),
    )?;

    // initial simplicial cone: ray i is tight on every basis constraint but i
    let mut rays: Vec<Ray> = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let rhs: Vec<Rational> = (0..=d)
            .map(|j| Rational::from_integer(BigInt::from(if i == j { -1 } else { 0 })))
            .collect();
        let y = solve_linear(&c0, &rhs)?;
        let l = y.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let coords = primitive(y.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect());
        let mut zeros = Bits::new(n);
        for (j, &b) in basis.iter().enumerate() {
            if j != i {
                zeros.set(b);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let mut in_basis = vec![false; n];
    for &b in &basis {
        in_basis[b] = true;
    }

    for k in (0..n).filter(|&k| !in_basis[k]) {
        let c = &constraints[k];
        let values: Vec<BigInt> = rays.iter().map(|r| dot(c, &r.coords)).collect();
        let plus: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let minus: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut fresh = Vec::new();
        for &p in &plus {
            for &q in &minus {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 1 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != q && common.subset_of(&ray.zeros));
                if blocked {
                    continue;
                }
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(yq, yp)| &values[p] * yq - &values[q] * yp)
                    .collect();
                let mut zeros = common;
                zeros.set(k);
                fresh.push(Ray { coords: primitive(coords), zeros });
            }
        }

        let mut next = Vec::with_capacity(rays.len() + fresh.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_positive() {
                continue;
            }
            if values[i].is_zero() {
                ray.zeros.set(k);
            }
            next.push(ray);
        }
        next.extend(fresh);
        rays = next;
    }

    let mut out = Vec::with_capacity(rays.len());
    for ray in rays {
        let (normal, offset) = ray.coords.split_at(d);
        let g = normal.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let to_i64 = |x: &BigInt| {
            (x / &g).to_i64().ok_or_else(|| Error::Overflow("facet coefficient exceeds i64".into()))
        };
        let normal: Vec<i64> = normal.iter().map(to_i64).collect::<Result<_>>()?;
        let offset = to_i64(&offset[0])?;
        let incident = points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.iter().zip(&normal).map(|(&x, &a)| x as i128 * a as i128).sum::<i128>() == offset as i128)
            .map(|(i, _)| i)
            .collect();
        out.push(RawFacet { normal, offset, incident });
    }
    Ok(out)
}
