//! Exact lattice-point counts of dilates `mP` by a pruned bounding-box scan.
//!
//! Coordinates are fixed outermost first. At each level every facet
//! inequality is solved for the current coordinate, with the remaining
//! coordinates replaced by their most favourable box values, which gives a
//! valid integer interval. At the innermost level the interval is exact, so
//! whole lines are counted in constant time.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::polytope::LatticePolytope;

/// `(|mP ∩ Z^d|, |∂(mP) ∩ Z^d|, |(mP)° ∩ Z^d|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub total: u64,
    pub boundary: u64,
    pub interior: u64,
}

/// Counts of `mP` for `m = 0, ..., m_max`. Row 0 is `(1, 1, 0)` by
/// convention.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DilationCounts {
    pub dim: usize,
    pub rows: Vec<Counts>,
}

impl DilationCounts {
    pub fn m_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, m: usize) -> Counts {
        self.rows[m]
    }

    pub fn totals(&self) -> Vec<BigInt> {
        self.rows.iter().map(|c| BigInt::from(c.total)).collect()
    }

    pub fn boundaries(&self) -> Vec<BigInt> {
        self.rows.iter().map(|c| BigInt::from(c.boundary)).collect()
    }

    pub fn interiors(&self) -> Vec<BigInt> {
        self.rows.iter().map(|c| BigInt::from(c.interior)).collect()
    }
}

struct Scan {
    d: usize,
    normals: Vec<Vec<i128>>,
    offsets: Vec<i128>,
    lo: Vec<i128>,
    hi: Vec<i128>,
    /// `slack[k][f]`: least value of `sum_{j > k} a_fj x_j` over the box.
    slack: Vec<Vec<i128>>,
}

/// Integer solutions of `a x <= r` as an interval update.
fn narrow(a: i128, r: i128, lo: &mut i128, hi: &mut i128) {
    if a > 0 {
        *hi = (*hi).min(Integer::div_floor(&r, &a));
    } else if a < 0 {
        *lo = (*lo).max(-Integer::div_floor(&r, &-a));
    } else if r < 0 {
        *lo = 1;
        *hi = 0;
    }
}

impl Scan {
    fn new(p: &LatticePolytope, m: u64) -> Self {
        let d = p.dim();
        let m = m as i128;
        let (blo, bhi) = p.bounding_box();
        let lo: Vec<i128> = blo.iter().map(|&x| x as i128 * m).collect();
        let hi: Vec<i128> = bhi.iter().map(|&x| x as i128 * m).collect();
        let normals: Vec<Vec<i128>> =
            p.facets().iter().map(|f| f.normal.iter().map(|&a| a as i128).collect()).collect();
        let offsets = p.facets().iter().map(|f| f.offset as i128 * m).collect();
        let mut slack = vec![vec![0i128; normals.len()]; d];
        for k in (0..d.saturating_sub(1)).rev() {
            for (f, a) in normals.iter().enumerate() {
                let j = k + 1;
                slack[k][f] = slack[j][f] + (a[j] * lo[j]).min(a[j] * hi[j]);
            }
        }
        Scan { d, normals, offsets, lo, hi, slack }
    }

    /// Range of coordinate `k` given the partial sums `partial[f]` of the
    /// fixed coordinates. `shrink` is subtracted from each right-hand side
    /// (1 for the interior at the innermost level).
    fn range(&self, k: usize, partial: &[i128], shrink: i128) -> (i128, i128) {
        let (mut lo, mut hi) = (self.lo[k], self.hi[k]);
        for (f, a) in self.normals.iter().enumerate() {
            let r = self.offsets[f] - partial[f] - self.slack[k][f] - shrink;
            narrow(a[k], r, &mut lo, &mut hi);
            if lo > hi {
                break;
            }
        }
        (lo, hi)
    }

    fn advance(&self, k: usize, partial: &[i128], x: i128) -> Vec<i128> {
        partial.iter().zip(&self.normals).map(|(s, a)| s + a[k] * x).collect()
    }

    /// `(total, interior)` over all completions of the fixed prefix.
    fn count_from(&self, k: usize, partial: &[i128]) -> (u128, u128) {
        if k + 1 == self.d {
            let (lo, hi) = self.range(k, partial, 0);
            if lo > hi {
                return (0, 0);
            }
            let (ilo, ihi) = self.range(k, partial, 1);
            let interior = if ilo > ihi { 0 } else { (ihi - ilo + 1) as u128 };
            return ((hi - lo + 1) as u128, interior);
        }
        let (lo, hi) = self.range(k, partial, 0);
        let mut acc = (0, 0);
        for x in lo..=hi {
            let (t, i) = self.count_from(k + 1, &self.advance(k, partial, x));
            acc.0 += t;
            acc.1 += i;
        }
        acc
    }

    fn run(&self) -> (u128, u128) {
        let start = vec![0i128; self.normals.len()];
        if self.d == 1 {
            return self.count_from(0, &start);
        }
        let (lo, hi) = self.range(0, &start, 0);
        (lo..=hi)
            .into_par_iter()
            .map(|x| self.count_from(1, &self.advance(0, &start, x)))
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    }

    fn collect_from(&self, k: usize, partial: &[i128], prefix: &mut Vec<i64>, strictly: bool, out: &mut Vec<Vec<i64>>) {
        let last = k + 1 == self.d;
        let shrink = i128::from(last && strictly);
        let (lo, hi) = self.range(k, partial, shrink);
        for x in lo..=hi {
            prefix.push(x as i64);
            if last {
                out.push(prefix.clone());
            } else {
                self.collect_from(k + 1, &self.advance(k, partial, x), prefix, strictly, out);
            }
            prefix.pop();
        }
    }
}

/// Counts for the single dilate `mP`.
pub fn count(p: &LatticePolytope, m: u64) -> Counts {
    if m == 0 {
        return Counts { total: 1, boundary: 1, interior: 0 };
    }
    let (total, interior) = Scan::new(p, m).run();
    let total = u64::try_from(total).expect("lattice point count fits in u64");
    let interior = u64::try_from(interior).expect("lattice point count fits in u64");
    Counts { total, boundary: total - interior, interior }
}

/// Independent counts for `m = 0, ..., m_max`.
pub fn count_range(p: &LatticePolytope, m_max: usize) -> DilationCounts {
    let rows = (0..=m_max as u64).into_par_iter().map(|m| count(p, m)).collect();
    DilationCounts { dim: p.dim(), rows }
}

/// Lattice points of `mP` (or of its interior), in lexicographic order.
pub fn lattice_points(p: &LatticePolytope, m: u64, strictly: bool) -> Vec<Vec<i64>> {
    if m == 0 {
        return if strictly { Vec::new() } else { vec![vec![0; p.dim()]] };
    }
    let scan = Scan::new(p, m);
    let mut out = Vec::new();
    let start = vec![0i128; scan.normals.len()];
    scan.collect_from(0, &start, &mut Vec::with_capacity(scan.d), strictly, &mut out);
    out
}
