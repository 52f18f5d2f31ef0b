//! Exact scalar and integer linear algebra.
//!
//! Every numeric value in the crate is either a machine integer small enough
//! to be checked, a [`BigInt`], or a [`Rational`] over big integers. Nothing
//! here ever touches floating point.

mod hnf;
mod matrix;

pub use hnf::{hermite_normal_form, integer_kernel, saturation_basis, HermiteForm};
pub use matrix::{IntMatrix, Matrix, RationalMatrix};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Canonical exact rational: positive denominator, reduced.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Generalized binomial coefficient `n(n-1)...(n-k+1)/k!`.
///
/// Zero whenever `k < 0`, and (as the falling factorial vanishes) whenever
/// `0 <= n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // symmetric shortcut only valid for n >= 0
    let k = if n >= 0 && k > n - k { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `(-1)^e` as a small integer.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Gcd of a slice of machine integers (0 for an empty or all-zero slice).
pub fn gcd_slice(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |g, &v| g.gcd(&v))
}

/// Exact determinant of an integer matrix by fraction-free (Bareiss)
/// elimination. Every intermediate division is exact.
pub fn det_int(m: &IntMatrix) -> Result<BigInt> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a: Vec<Vec<BigInt>> = m.to_rows();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Exact determinant of a rational matrix: rows are scaled to integers,
/// the integer determinant is taken, then the scaling is divided out.
pub fn det_rational(m: &RationalMatrix) -> Result<Rational> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(m.rows());
    for row in m.to_rows() {
        let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        rows.push(row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect());
        scale *= l;
    }
    let d = det_int(&IntMatrix::from_rows(rows)?)?;
    Ok(Rational::new(d, scale))
}

/// Rank of an integer matrix (fraction-free elimination).
pub fn rank_int(m: &IntMatrix) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            if a[i][col].is_zero() {
                continue;
            }
            let (f, g) = (a[rank][col].clone(), a[i][col].clone());
            for j in col..cols {
                let v = &a[i][j] * &f - &a[rank][j] * &g;
                a[i][j] = v;
            }
            // keep entries small
            let c = a[i].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !c.is_zero() && !c.is_one() {
                for x in a[i].iter_mut() {
                    *x /= &c;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimension of the affine hull of a non-empty point set.
pub fn affine_rank(points: &[Vec<i64>]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    rank_int(&IntMatrix::from_rows(rows).expect("rectangular"))
}

/// Solve `a · x = b` exactly by Gaussian elimination over the rationals.
pub fn solve_linear(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if b.len() != n {
        return Err(Error::Arity { expected: n, got: b.len() });
    }
    let mut aug: Vec<Vec<Rational>> = a
        .to_rows()
        .into_iter()
        .zip(b)
        .map(|(mut row, bi)| {
            row.push(bi.clone());
            row
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&i| !aug[i][col].is_zero()).ok_or(Error::Singular)?;
        aug.swap(col, p);
        let pivot = aug[col][col].clone();
        for x in aug[col].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..n {
            if i == col || aug[i][col].is_zero() {
                continue;
            }
            let f = aug[i][col].clone();
            for j in col..=n {
                let v = &aug[col][j] * &f;
                aug[i][j] -= v;
            }
        }
    }
    Ok(aug.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_int(&im(&[&[5]])).unwrap(), BigInt::from(5));
        assert_eq!(det_int(&im(&[&[1, 1], &[8, 2]])).unwrap(), BigInt::from(-6));
        assert_eq!(det_int(&IntMatrix::identity(3)).unwrap(), BigInt::from(1));
        assert_eq!(det_int(&im(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det_int(&im(&[&[1, 2], &[2, 4]])).unwrap(), BigInt::from(0));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = im(&[&[1, 2, 3], &[4, 5, 6]]);
        assert_eq!(det_int(&m), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        // cofactor expansion as an independent route
        fn cofactor(m: &[Vec<i64>]) -> i64 {
            if m.is_empty() {
                return 1;
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                        .collect();
                    sign_pow(j as i64) * m[0][j] * cofactor(&minor)
                })
                .sum()
        }
        let m = vec![vec![2, -1, 0, 3], vec![1, 4, -2, 0], vec![0, 0, 5, 1], vec![-3, 2, 1, 1]];
        let big = IntMatrix::from_rows(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .unwrap();
        assert_eq!(det_int(&big).unwrap(), BigInt::from(cofactor(&m)));
    }

    #[test]
    fn rational_det() {
        let m = RationalMatrix::from_rows(vec![vec![rat(1, 2), rat(1, 3)], vec![rat(2, 1), rat(5, 7)]]).unwrap();
        // 1/2*5/7 - 1/3*2 = 5/14 - 2/3 = (15 - 28)/42
        assert_eq!(det_rational(&m).unwrap(), rat(-13, 42));
    }

    #[test]
    fn solve_cases() {
        let id = RationalMatrix::identity(3);
        let b = vec![rat(1, 2), rat(-3, 1), rat(7, 5)];
        assert_eq!(solve_linear(&id, &b).unwrap(), b);

        let one = RationalMatrix::from_rows(vec![vec![rat(2, 1)]]).unwrap();
        assert_eq!(solve_linear(&one, &[rat(3, 1)]).unwrap(), vec![rat(3, 2)]);

        let sing = RationalMatrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]]).unwrap();
        assert_eq!(solve_linear(&sing, &[rat(1, 1), rat(1, 1)]), Err(Error::Singular));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        // generalized: C(-1, k) = (-1)^k
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
    }

    #[test]
    fn binomial_pascal() {
        for n in 1..=30i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k), "C({n},{k})");
            }
        }
    }

    #[test]
    fn rational_is_canonical() {
        let r = Rational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_int(&im(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank_int(&im(&[&[0, 0]])), 0);
        assert_eq!(affine_rank(&[vec![0, 0], vec![1, 1], vec![2, 2]]), 1);
        assert_eq!(affine_rank(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), 3);
    }
}
