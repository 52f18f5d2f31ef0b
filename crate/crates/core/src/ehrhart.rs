//! Ehrhart polynomials by exact interpolation, and δ-vectors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::count::{count_range, DilationCounts};
use crate::error::{Error, Result};
use crate::exact::{binomial, rat_int, sign_pow, solve_linear, Rational, RationalMatrix};
use crate::polytope::LatticePolytope;

/// Dense polynomial with rational coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    pub coeffs: Vec<Rational>,
}

impl Polynomial {
    /// The unique polynomial of degree `< xs.len()` through the samples.
    pub fn interpolate(xs: &[i64], ys: &[BigInt]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::Arity { expected: xs.len(), got: ys.len() });
        }
        let n = xs.len();
        let rows = xs
            .iter()
            .map(|&x| {
                let x = rat_int(x);
                let mut row = Vec::with_capacity(n);
                let mut pow = Rational::one();
                for _ in 0..n {
                    row.push(pow.clone());
                    pow *= &x;
                }
                row
            })
            .collect();
        let v = RationalMatrix::from_rows(rows)?;
        let rhs: Vec<Rational> = ys.iter().cloned().map(Rational::from_integer).collect();
        let coeffs = solve_linear(&v, &rhs)?;
        Ok(Self { coeffs })
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat_int(x))
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if i > 0 && !a.is_integer() {
                write!(f, "({a})")?;
            } else if i == 0 || !a.is_one() {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `L_P(m) = c_d m^d + ... + c_1 m + c_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub dim: usize,
    pub poly: Polynomial,
}

impl EhrhartPolynomial {
    /// `c_0, ..., c_d`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.poly.coeffs
    }

    pub fn eval(&self, m: i64) -> Rational {
        self.poly.eval_int(m)
    }

    /// `c_d`.
    pub fn volume(&self) -> Rational {
        self.poly.coeff(self.dim)
    }

    /// `2 c_{d-1}`.
    pub fn boundary_volume(&self) -> Rational {
        self.poly.coeff(self.dim - 1) * rat_int(2)
    }
}

/// Interpolate through `m = 0..=d` and check any further samples.
pub fn interpolate_ehrhart(counts: &DilationCounts) -> Result<EhrhartPolynomial> {
    interpolate_totals(counts.dim, &counts.totals())
}

/// As [`interpolate_ehrhart`], from the totals `L(0), L(1), ...` alone.
pub fn interpolate_totals(d: usize, totals: &[BigInt]) -> Result<EhrhartPolynomial> {
    if totals.len() < d + 1 {
        return Err(Error::Arity { expected: d + 1, got: totals.len() });
    }
    let xs: Vec<i64> = (0..=d as i64).collect();
    let poly = Polynomial::interpolate(&xs, &totals[..=d])?;
    for (m, t) in totals.iter().enumerate().skip(d + 1) {
        if poly.eval_int(m as i64) != Rational::from_integer(t.clone()) {
            return Err(Error::Inconsistency(format!("count at m = {m} is off the interpolated polynomial")));
        }
    }
    if !poly.coeff(0).is_one() {
        return Err(Error::Inconsistency(format!("constant term {} is not 1", poly.coeff(0))));
    }
    if !poly.coeff(d).is_positive() {
        return Err(Error::Inconsistency(format!("leading coefficient {} is not positive", poly.coeff(d))));
    }
    Ok(EhrhartPolynomial { dim: d, poly })
}

/// Counts for `m <= max(d, m_max)` and the interpolated polynomial.
pub fn ehrhart_of(p: &LatticePolytope, m_max: usize) -> Result<(DilationCounts, EhrhartPolynomial)> {
    let counts = count_range(p, m_max.max(p.dim()));
    let e = interpolate_ehrhart(&counts)?;
    Ok((counts, e))
}

/// Numerator `δ_0 + δ_1 t + ... + δ_d t^d` of the Ehrhart series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaVector(pub Vec<BigInt>);

impl DeltaVector {
    pub fn from_i64(values: &[i64]) -> Self {
        Self(values.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

/// `δ_i = sum_{j <= i} (-1)^j C(d+1, j) L(i - j)`.
pub fn delta_vector(counts: &DilationCounts) -> Result<DeltaVector> {
    delta_from_totals(counts.dim, &counts.totals())
}

pub fn delta_from_totals(d: usize, totals: &[BigInt]) -> Result<DeltaVector> {
    if totals.len() < d + 1 {
        return Err(Error::Arity { expected: d + 1, got: totals.len() });
    }
    let mut delta = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let v: BigInt = (0..=i)
            .map(|j| sign_pow(j as i64) * binomial(d as i64 + 1, j as i64) * &totals[i - j])
            .sum();
        if v.is_negative() {
            return Err(Error::Inconsistency(format!("delta_{i} = {v} is negative")));
        }
        delta.push(v);
    }
    Ok(DeltaVector(delta))
}

/// Both three-dimensional identities relating volume, total and boundary
/// counts, for `1 <= m <= m_max`.
pub fn reeve_check(p: &LatticePolytope, m_max: usize) -> Result<bool> {
    if p.dim() != 3 {
        return Err(Error::Dimension { expected: 3, actual: p.dim() });
    }
    let (counts, e) = ehrhart_of(p, m_max)?;
    let vol = e.volume();
    let l1 = counts.get(1);
    for m in 1..=m_max {
        let c = counts.get(m);
        let mi = m as i64;
        let lhs = rat_int(2 * (mi - 1) * mi * (mi + 1)) * &vol;
        let rhs = 2 * (c.total as i64 - mi * l1.total as i64) - (c.boundary as i64 - mi * l1.boundary as i64);
        if lhs != rat_int(rhs) {
            return Ok(false);
        }
        if c.boundary as i64 != 2 * (1 - mi * mi) + mi * mi * l1.boundary as i64 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::count_range;
    use crate::exact::rat;
    use crate::fixtures::{cross_polytope, standard_simplex, unit_cube};

    fn poly(p: &LatticePolytope) -> EhrhartPolynomial {
        interpolate_ehrhart(&count_range(p, p.dim() + 2)).unwrap()
    }

    #[test]
    fn known_polynomials() {
        assert_eq!(poly(&unit_cube(3)).coeffs(), &[rat(1, 1), rat(3, 1), rat(3, 1), rat(1, 1)]);
        assert_eq!(poly(&cross_polytope(3)).coeffs(), &[rat(1, 1), rat(8, 3), rat(2, 1), rat(4, 3)]);
        assert_eq!(poly(&standard_simplex(3)).coeffs(), &[rat(1, 1), rat(11, 6), rat(1, 1), rat(1, 6)]);
    }

    #[test]
    fn volumes() {
        let e = poly(&unit_cube(3));
        assert_eq!((e.volume(), e.boundary_volume()), (rat(1, 1), rat(6, 1)));
        let e = poly(&cross_polytope(3));
        assert_eq!((e.volume(), e.boundary_volume()), (rat(4, 3), rat(4, 1)));
        let e = poly(&cross_polytope(4));
        assert_eq!((e.volume(), e.boundary_volume()), (rat(2, 3), rat(8, 3)));
    }

    #[test]
    fn deltas() {
        let d = |p: &LatticePolytope| delta_vector(&count_range(p, p.dim())).unwrap();
        assert_eq!(d(&unit_cube(3)), DeltaVector::from_i64(&[1, 4, 1, 0]));
        assert_eq!(d(&cross_polytope(3)), DeltaVector::from_i64(&[1, 3, 3, 1]));
        assert_eq!(d(&standard_simplex(3)), DeltaVector::from_i64(&[1, 0, 0, 0]));
    }

    #[test]
    fn negative_delta_is_an_error() {
        let totals: Vec<BigInt> = [1, 2, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert!(matches!(delta_from_totals(2, &totals), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn off_polynomial_sample_is_an_error() {
        // (m+1)^2 except at m = 3
        let totals: Vec<BigInt> = [1, 4, 9, 17].iter().map(|&x| BigInt::from(x)).collect();
        assert!(matches!(interpolate_totals(2, &totals), Err(Error::Inconsistency(_))));
        assert!(matches!(interpolate_totals(3, &totals[..2]), Err(Error::Arity { .. })));
    }

    #[test]
    fn reeve() {
        assert!(reeve_check(&unit_cube(3), 3).unwrap());
        assert!(reeve_check(&cross_polytope(3), 3).unwrap());
        let tall = LatticePolytope::hull_from_vertices(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 5]])
            .unwrap();
        assert!(reeve_check(&tall, 3).unwrap());
        assert!(reeve_check(&unit_cube(2), 3).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(poly(&cross_polytope(3)).poly.to_string(), "(4/3)m^3 + 2m^2 + (8/3)m + 1");
    }
}
