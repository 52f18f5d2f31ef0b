//! Doubly stochastic matrices: magic-square counts and the Birkhoff
//! polytope in a full-dimensional chart.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::count::{count_range, lattice_points};
use crate::ehrhart::{interpolate_totals, EhrhartPolynomial};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat_int, sign_pow, Rational};
use crate::polytope::LatticePolytope;
use crate::reflexive::is_reflexive;

fn check_range(d: usize, lo: usize, hi: usize) -> Result<()> {
    if (lo..=hi).contains(&d) {
        Ok(())
    } else {
        Err(Error::Scale(format!("Birkhoff dimension d = {d} outside {lo}..={hi}")))
    }
}

struct MagicDp {
    r: u64,
    min_entry: u64,
    memo: HashMap<(Vec<u64>, usize), BigInt>,
}

impl MagicDp {
    /// Fillings of the remaining `cols` columns given residual row sums.
    fn fill(&mut self, mut residual: Vec<u64>, cols: usize) -> BigInt {
        if cols == 0 {
            return if residual.iter().all(|&x| x == 0) { BigInt::one() } else { BigInt::zero() };
        }
        if cols == 1 {
            // the last column is forced
            return if residual.iter().all(|&x| x >= self.min_entry) { BigInt::one() } else { BigInt::zero() };
        }
        residual.sort_unstable();
        let key = (residual, cols);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let (residual, _) = &key;
        let reserve = self.min_entry * (cols as u64 - 1);
        let mut total = BigInt::zero();
        let mut column = vec![0u64; residual.len()];
        self.columns(residual, reserve, 0, self.r, &mut column, cols, &mut total);
        self.memo.insert(key, total.clone());
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn columns(
        &mut self,
        residual: &[u64],
        reserve: u64,
        i: usize,
        left: u64,
        column: &mut Vec<u64>,
        cols: usize,
        total: &mut BigInt,
    ) {
        if i == residual.len() {
            if left == 0 {
                let next: Vec<u64> = residual.iter().zip(column.iter()).map(|(a, b)| a - b).collect();
                *total += self.fill(next, cols - 1);
            }
            return;
        }
        let Some(hi) = residual[i].checked_sub(reserve) else { return };
        let hi = hi.min(left);
        for c in self.min_entry..=hi {
            column[i] = c;
            self.columns(residual, reserve, i + 1, left - c, column, cols, total);
        }
    }
}

fn magic(d: usize, r: u64, min_entry: u64) -> BigInt {
    if d == 0 {
        return BigInt::one();
    }
    let mut dp = MagicDp { r, min_entry, memo: HashMap::new() };
    dp.fill(vec![r; d], d)
}

/// `H_d(r)`: non-negative integer `d x d` matrices with every line sum `r`.
pub fn magic_count(d: usize, r: u64) -> BigInt {
    magic(d, r, 0)
}

/// `P_d(r)`: as [`magic_count`] with every entry at least 1.
pub fn positive_magic_count(d: usize, r: u64) -> BigInt {
    magic(d, r, 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicTable {
    pub d: usize,
    /// `H_d(r)` for `r = 0..=r_max`.
    pub magic: Vec<BigInt>,
    /// `P_d(r)` for `r = 0..=r_max`.
    pub positive: Vec<BigInt>,
}

impl MagicTable {
    pub fn new(d: usize, r_max: u64) -> Self {
        Self {
            d,
            magic: (0..=r_max).map(|r| magic_count(d, r)).collect(),
            positive: (0..=r_max).map(|r| positive_magic_count(d, r)).collect(),
        }
    }
}

/// Coordinates given by the top-left `(d-1) x (d-1)` minor; the last row
/// and column are recovered from the line sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BirkhoffChart {
    pub d: usize,
}

impl BirkhoffChart {
    pub fn new(d: usize) -> Result<Self> {
        if d < 2 {
            return Err(Error::Scale(format!("Birkhoff chart needs d >= 2, got {d}")));
        }
        Ok(Self { d })
    }

    /// `(d-1)^2`.
    pub fn dim(&self) -> usize {
        (self.d - 1) * (self.d - 1)
    }

    pub fn project(&self, matrix: &[Vec<i64>]) -> Result<Vec<i64>> {
        if matrix.len() != self.d || matrix.iter().any(|row| row.len() != self.d) {
            return Err(Error::Shape(format!("expected a {0} x {0} matrix", self.d)));
        }
        Ok(matrix[..self.d - 1].iter().flat_map(|row| row[..self.d - 1].iter().copied()).collect())
    }

    /// The matrix with line sums `m` whose minor is `x`.
    pub fn lift(&self, x: &[i64], m: i64) -> Result<Vec<Vec<i64>>> {
        let k = self.d - 1;
        if x.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), actual: x.len() });
        }
        let mut a = vec![vec![0i64; self.d]; self.d];
        for i in 0..k {
            for j in 0..k {
                a[i][j] = x[i * k + j];
            }
            a[i][k] = m - a[i][..k].iter().sum::<i64>();
        }
        for j in 0..=k {
            a[k][j] = m - (0..k).map(|i| a[i][j]).sum::<i64>();
        }
        Ok(a)
    }

    pub fn permutation_matrices(&self) -> Vec<Vec<Vec<i64>>> {
        permutations(self.d)
            .into_iter()
            .map(|p| (0..self.d).map(|i| (0..self.d).map(|j| i64::from(p[i] == j)).collect()).collect())
            .collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `B(d)` in the chart, as the hull of the projected permutation matrices.
pub fn birkhoff_polytope(d: usize) -> Result<LatticePolytope> {
    check_range(d, 2, 4)?;
    let chart = BirkhoffChart::new(d)?;
    let points = chart.permutation_matrices().iter().map(|m| chart.project(m)).collect::<Result<Vec<_>>>()?;
    LatticePolytope::hull_from_vertices(&points)
}

/// Chart scan counts of `mB(d)` against `H_d(m)` and `P_d(m)`, `m <= m_max`.
pub fn chart_soundness_check(d: usize, m_max: usize) -> Result<bool> {
    let p = birkhoff_polytope(d)?;
    let counts = count_range(&p, m_max);
    Ok((0..=m_max).all(|m| {
        let c = counts.get(m);
        BigInt::from(c.total) == magic_count(d, m as u64)
            && (m == 0 || BigInt::from(c.interior) == positive_magic_count(d, m as u64))
    }))
}

/// `L_{B(d)}` interpolated from `H_d(0..=D+2)`.
pub fn birkhoff_ehrhart(d: usize) -> Result<EhrhartPolynomial> {
    check_range(d, 2, 4)?;
    let big_d = (d - 1) * (d - 1);
    let h: Vec<BigInt> = (0..=big_d as u64 + 2).map(|r| magic_count(d, r)).collect();
    interpolate_totals(big_d, &h)
}

/// `L(-d-t) = (-1)^D L(t)` for `t = 0..=3`.
pub fn birkhoff_reciprocity_check(d: usize) -> Result<bool> {
    let e = birkhoff_ehrhart(d)?;
    let di = d as i64;
    let sign = rat_int(sign_pow(((d - 1) * (d - 1)) as i64));
    Ok((0..=3).all(|t| e.eval(-di - t) == &sign * e.eval(t)))
}

/// `dB(d)` has the image of the all-ones matrix as its only interior
/// lattice point, its translate by that point is reflexive, and
/// `(-1)^D L_{dB(d)}(-m) = L_{dB(d)}(m-1)` for `m = 1..=3`.
pub fn birkhoff_reflexive_checks(d: usize) -> Result<bool> {
    check_range(d, 2, 3)?;
    let chart = BirkhoffChart::new(d)?;
    let ones = vec![1i64; chart.dim()];
    if positive_magic_count(d, d as u64) != BigInt::one() {
        return Ok(false);
    }
    let p = birkhoff_polytope(d)?.dilate(d as i64)?;
    let inside = lattice_points(&p, 1, true);
    if inside != [ones.clone()] {
        return Ok(false);
    }
    let shift: Vec<i64> = ones.iter().map(|x| -x).collect();
    if !is_reflexive(&p.translate(&shift)?)? {
        return Ok(false);
    }
    let e = birkhoff_ehrhart(d)?;
    let di = d as i64;
    let sign = rat_int(sign_pow(chart.dim() as i64));
    Ok((1..=3).all(|m| &sign * e.eval(-di * m) == e.eval(di * (m - 1))))
}

/// Volume of `B(d)` in the chart lattice from `h[m] = H_d(md)`,
/// `m = 0..=floor(D/2)`.
pub fn birkhoff_volume_from_values(d: usize, h: &[BigInt]) -> Result<Rational> {
    if d < 2 {
        return Err(Error::Scale(format!("Birkhoff dimension d = {d} below 2")));
    }
    let big_d = ((d - 1) * (d - 1)) as i64;
    let n = big_d / 2;
    if h.len() != n as usize + 1 {
        return Err(Error::Arity { expected: n as usize + 1, got: h.len() });
    }
    let mut sum = BigInt::zero();
    for m in 0..=n {
        let c = binomial(big_d, n - m) + sign_pow(d as i64) * binomial(big_d, n + m + 1);
        sum += sign_pow(n + m) * c * &h[m as usize];
    }
    let denom = factorial(big_d as u64) * BigInt::from(d).pow(big_d as u32);
    Ok(rat_int(sum) / rat_int(denom))
}

pub fn birkhoff_volume(d: usize) -> Result<Rational> {
    check_range(d, 2, 4)?;
    let n = (d - 1) * (d - 1) / 2;
    let h: Vec<BigInt> = (0..=n as u64).map(|m| magic_count(d, m * d as u64)).collect();
    birkhoff_volume_from_values(d, &h)
}

/// `sum_{m=0}^N (-1)^{N+m} C(d^2-2d+3, N-m) h[m]` with `h[m] = H_d(dm)`,
/// `N = ceil((d-1)^2/2)`; zero for even `d`.
pub fn birkhoff_even_identity_from_values(d: usize, h: &[BigInt]) -> Result<BigInt> {
    if d % 2 == 1 {
        return Err(Error::Parity { d, what: "the Birkhoff identity needs even d" });
    }
    let di = d as i64;
    let big_n = ((d - 1) * (d - 1)).div_ceil(2) as i64;
    if h.len() != big_n as usize + 1 {
        return Err(Error::Arity { expected: big_n as usize + 1, got: h.len() });
    }
    Ok((0..=big_n).map(|m| sign_pow(big_n + m) * binomial(di * di - 2 * di + 3, big_n - m) * &h[m as usize]).sum())
}

pub fn birkhoff_even_identity(d: usize) -> Result<BigInt> {
    if d % 2 == 1 {
        return Err(Error::Parity { d, what: "the Birkhoff identity needs even d" });
    }
    check_range(d, 2, 4)?;
    let big_n = (d - 1) * (d - 1);
    let big_n = big_n.div_ceil(2) as u64;
    let h: Vec<BigInt> = (0..=big_n).map(|m| magic_count(d, m * d as u64)).collect();
    birkhoff_even_identity_from_values(d, &h)
}

/// `D! d^D vol B(d)` against two right-hand sides: `(D-1) H_d(d) - D^2 + 3`
/// from the general lower bound applied to the reflexive dilate, and
/// `D H_d(d) - D + 3` as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirkhoffBound {
    pub lhs: BigInt,
    pub derived_rhs: BigInt,
    pub printed_rhs: BigInt,
}

impl BirkhoffBound {
    pub fn derived_holds(&self) -> bool {
        self.lhs >= self.derived_rhs
    }

    pub fn printed_holds(&self) -> bool {
        self.lhs >= self.printed_rhs
    }
}

pub fn birkhoff_volume_bound(d: usize) -> Result<BirkhoffBound> {
    let vol = birkhoff_volume(d)?;
    let big_d = ((d - 1) * (d - 1)) as i64;
    let scaled = vol * rat_int(factorial(big_d as u64) * BigInt::from(d).pow(big_d as u32));
    if !scaled.is_integer() {
        return Err(Error::Inconsistency(format!("normalized volume {scaled} is not an integer")));
    }
    let h = magic_count(d, d as u64);
    Ok(BirkhoffBound {
        lhs: scaled.to_integer(),
        derived_rhs: BigInt::from(big_d - 1) * &h - big_d * big_d + 3,
        printed_rhs: BigInt::from(big_d) * &h - big_d + 3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    /// Every `d x d` matrix with entries in `lo..=r` and line sums `r`.
    fn brute(d: usize, r: i64, lo: i64) -> u64 {
        let cells = d * d;
        let mut a = vec![lo; cells];
        let mut count = 0;
        if lo > r {
            return 0;
        }
        loop {
            let rows = (0..d).all(|i| (0..d).map(|j| a[i * d + j]).sum::<i64>() == r);
            let cols = (0..d).all(|j| (0..d).map(|i| a[i * d + j]).sum::<i64>() == r);
            if rows && cols {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == cells {
                    return count;
                }
                a[i] += 1;
                if a[i] <= r {
                    break;
                }
                a[i] = lo;
                i += 1;
            }
        }
    }

    #[test]
    fn small_counts() {
        for r in 0..=5 {
            assert_eq!(magic_count(2, r), BigInt::from(r + 1));
        }
        assert_eq!(magic_count(3, 1), BigInt::from(6));
        assert_eq!(magic_count(3, 3), BigInt::from(55));
        assert_eq!(positive_magic_count(3, 3), BigInt::one());
        assert_eq!(positive_magic_count(3, 2), BigInt::zero());
        assert_eq!(magic_count(1, 7), BigInt::one());
    }

    #[test]
    fn dp_matches_enumeration() {
        for d in 1..=3 {
            for r in 0..=3 {
                assert_eq!(magic_count(d, r as u64), BigInt::from(brute(d, r, 0)), "H_{d}({r})");
                assert_eq!(positive_magic_count(d, r as u64), BigInt::from(brute(d, r, 1)), "P_{d}({r})");
            }
        }
    }

    #[test]
    fn positive_shift() {
        for r in 4..=12 {
            assert_eq!(positive_magic_count(4, r), magic_count(4, r - 4));
        }
    }

    #[test]
    fn chart_round_trip() {
        let chart = BirkhoffChart::new(3).unwrap();
        for m in chart.permutation_matrices() {
            let x = chart.project(&m).unwrap();
            assert_eq!(chart.lift(&x, 1).unwrap(), m);
        }
        assert_eq!(chart.dim(), 4);
    }

    #[test]
    fn polytopes() {
        let b2 = birkhoff_polytope(2).unwrap();
        assert_eq!(b2.vertices(), &[vec![0], vec![1]]);
        let b3 = birkhoff_polytope(3).unwrap();
        assert_eq!((b3.dim(), b3.vertices().len()), (4, 6));
        assert!(matches!(birkhoff_polytope(5), Err(Error::Scale(_))));
        assert!(chart_soundness_check(2, 3).unwrap());
        assert!(chart_soundness_check(3, 3).unwrap());
    }

    #[test]
    fn reciprocity() {
        assert!(birkhoff_reciprocity_check(2).unwrap());
        assert!(birkhoff_reciprocity_check(3).unwrap());
        let e = birkhoff_ehrhart(3).unwrap();
        assert_eq!((e.eval(-3), e.eval(-4)), (rat(1, 1), rat(6, 1)));
    }

    #[test]
    fn reflexive_dilates() {
        assert!(birkhoff_reflexive_checks(2).unwrap());
        assert!(birkhoff_reflexive_checks(3).unwrap());
    }

    #[test]
    fn volumes() {
        assert_eq!(birkhoff_volume(2).unwrap(), rat(1, 1));
        assert_eq!(birkhoff_volume(3).unwrap(), rat(1, 8));
        assert_eq!(birkhoff_volume(3).unwrap(), birkhoff_ehrhart(3).unwrap().volume());
        assert_eq!(birkhoff_volume(4).unwrap(), birkhoff_ehrhart(4).unwrap().volume());
        assert_eq!(birkhoff_volume(4).unwrap(), rat(11, 11340));
    }

    #[test]
    fn even_identity() {
        assert_eq!(birkhoff_even_identity(2).unwrap(), BigInt::zero());
        assert_eq!(birkhoff_even_identity(4).unwrap(), BigInt::zero());
        let bad = [BigInt::from(1), BigInt::from(4)];
        assert_eq!(birkhoff_even_identity_from_values(2, &bad).unwrap(), BigInt::one());
        assert!(matches!(birkhoff_even_identity(3), Err(Error::Parity { .. })));
    }

    #[test]
    fn volume_bounds() {
        let b = birkhoff_volume_bound(2).unwrap();
        assert_eq!((b.lhs.clone(), b.derived_rhs.clone(), b.printed_rhs.clone()), (2.into(), 2.into(), 5.into()));
        assert!(b.derived_holds() && !b.printed_holds());
        let b = birkhoff_volume_bound(3).unwrap();
        assert_eq!((b.lhs.clone(), b.derived_rhs.clone(), b.printed_rhs.clone()), (243.into(), 152.into(), 219.into()));
        assert!(birkhoff_volume_bound(4).unwrap().derived_holds());
    }
}
