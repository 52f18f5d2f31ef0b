//! Finite posets, their order polynomials and order polytopes.
//!
//! Elements are `0..d` and sets of elements are bitmasks, so `d <= 16`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::count::{count_range, lattice_points};
use crate::ehrhart::{interpolate_ehrhart, Polynomial};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat_int, sign_pow, Rational};
use crate::polytope::LatticePolytope;
use crate::reflexive::is_reflexive;

pub const MAX_POSET_SIZE: usize = 16;
pub const MAX_ORDER_POLYTOPE_SIZE: usize = 8;

/// On-disk poset: `{"size": d, "covers": [[lower, upper], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetInput {
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    size: usize,
    /// `above[x]`: elements strictly greater than `x`.
    above: Vec<u32>,
    /// `below[x]`: elements strictly less than `x`.
    below: Vec<u32>,
    covers: Vec<(usize, usize)>,
    rank: Option<usize>,
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

impl Poset {
    /// From relations `lower < upper`; any relation set whose transitive
    /// closure is acyclic is accepted and reduced to its covers.
    pub fn new(size: usize, relations: &[(usize, usize)]) -> Result<Self> {
        if size == 0 || size > MAX_POSET_SIZE {
            return Err(Error::Scale(format!("poset size {size} outside 1..={MAX_POSET_SIZE}")));
        }
        let mut above = vec![0u32; size];
        for &(a, b) in relations {
            if a >= size || b >= size {
                return Err(Error::Invalid(format!("relation ({a}, {b}) names an element outside 0..{size}")));
            }
            above[a] |= 1 << b;
        }
        // transitive closure
        for k in 0..size {
            for i in 0..size {
                if above[i] >> k & 1 == 1 {
                    above[i] |= above[k];
                }
            }
        }
        if (0..size).any(|x| above[x] >> x & 1 == 1) {
            return Err(Error::Invalid("relations contain a cycle".into()));
        }
        let mut below = vec![0u32; size];
        for x in 0..size {
            for y in bits(above[x]) {
                below[y] |= 1 << x;
            }
        }
        let mut covers = Vec::new();
        for x in 0..size {
            for y in bits(above[x]) {
                // y covers x unless some z lies strictly between
                if above[x] & below[y] == 0 {
                    covers.push((x, y));
                }
            }
        }
        let mut q = Self { size, above, below, covers, rank: None };
        q.rank = q.compute_rank();
        Ok(q)
    }

    pub fn from_input(input: &PosetInput) -> Result<Self> {
        let rel: Vec<(usize, usize)> = input.covers.iter().map(|c| (c[0], c[1])).collect();
        Self::new(input.size, &rel)
    }

    pub fn to_input(&self) -> PosetInput {
        PosetInput { size: self.size, covers: self.covers.iter().map(|&(a, b)| [a, b]).collect() }
    }

    pub fn chain(d: usize) -> Result<Self> {
        let rel: Vec<(usize, usize)> = (1..d).map(|i| (i - 1, i)).collect();
        Self::new(d, &rel)
    }

    pub fn antichain(d: usize) -> Result<Self> {
        Self::new(d, &[])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Cover relations `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.above[x] >> y & 1 == 1
    }

    pub fn is_graded(&self) -> bool {
        self.rank.is_some()
    }

    /// Common length (in cover steps) of all maximal chains.
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    fn compute_rank(&self) -> Option<usize> {
        // shortest and longest saturated chains from each element upward
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| self.above[x].count_ones());
        let mut lo = vec![0usize; self.size];
        let mut hi = vec![0usize; self.size];
        for &x in &order {
            let ups: Vec<usize> = self.covers.iter().filter(|c| c.0 == x).map(|c| c.1).collect();
            if !ups.is_empty() {
                lo[x] = 1 + ups.iter().map(|&y| lo[y]).min().unwrap();
                hi[x] = 1 + ups.iter().map(|&y| hi[y]).max().unwrap();
            }
        }
        let minimal: Vec<usize> = (0..self.size).filter(|&x| self.below[x] == 0).collect();
        let short = minimal.iter().map(|&x| lo[x]).min()?;
        let long = minimal.iter().map(|&x| hi[x]).max()?;
        (short == long).then_some(short)
    }

    /// Elements in the longest chain.
    pub fn height(&self) -> usize {
        let mut order: Vec<usize> = (0..self.size).collect();
        order.sort_by_key(|&x| self.above[x].count_ones());
        let mut h = vec![1usize; self.size];
        for &x in &order {
            h[x] = 1 + bits(self.above[x]).map(|y| h[y]).max().unwrap_or(0);
        }
        h.into_iter().max().unwrap_or(0)
    }

    fn full(&self) -> u32 {
        if self.size == 32 {
            u32::MAX
        } else {
            (1u32 << self.size) - 1
        }
    }

    pub fn is_down_set(&self, s: u32) -> bool {
        bits(s).all(|x| self.below[x] & !s == 0)
    }

    pub fn is_up_set(&self, s: u32) -> bool {
        bits(s).all(|x| self.above[x] & !s == 0)
    }

    /// Maximal elements of a down-set.
    fn maximal_in(&self, s: u32) -> u32 {
        bits(s).filter(|&x| self.above[x] & s == 0).fold(0, |m, x| m | 1 << x)
    }

    fn down_sets(&self) -> Vec<u32> {
        (0..=self.full()).filter(|&s| self.is_down_set(s)).collect()
    }

    pub fn up_sets(&self) -> Vec<u32> {
        (0..=self.full()).filter(|&s| self.is_up_set(s)).collect()
    }
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or_else(|| Error::Overflow("order polynomial value exceeds u128".into()))
}

/// Number of order-preserving maps `Q -> C_k`: multichains
/// `D_1 ⊆ ... ⊆ D_{k-1}` of down-sets.
pub fn order_polynomial(q: &Poset, k: u64) -> Result<BigInt> {
    if k == 0 {
        return Ok(BigInt::zero());
    }
    let n = 1usize << q.size;
    let mut ways = vec![0u128; n];
    for s in q.down_sets() {
        ways[s as usize] = 1;
    }
    for _ in 1..k {
        // sum over sub-down-sets: zeta transform restricted to down-sets
        for i in 0..q.size {
            for s in 0..n {
                if s >> i & 1 == 1 {
                    ways[s] = add(ways[s], ways[s ^ 1 << i])?;
                }
            }
        }
        for s in 0..n {
            if !q.is_down_set(s as u32) {
                ways[s] = 0;
            }
        }
    }
    Ok(BigInt::from(ways[n - 1]))
}

/// Number of strictly order-preserving maps `Q -> C_k`: chains of down-sets
/// whose successive differences are antichains.
pub fn strict_order_polynomial(q: &Poset, k: u64) -> Result<BigInt> {
    let downs = q.down_sets();
    let mut ways = vec![0u128; 1 << q.size];
    ways[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; ways.len()];
        for &s in &downs {
            let top = q.maximal_in(s);
            // every subset of the maximal elements may form the new level
            let mut a = top;
            loop {
                next[s as usize] = add(next[s as usize], ways[(s & !a) as usize])?;
                if a == 0 {
                    break;
                }
                a = (a - 1) & top;
            }
        }
        ways = next;
    }
    Ok(BigInt::from(ways[q.full() as usize]))
}

/// `e(Q)`, counted by peeling maximal elements off down-sets.
pub fn linear_extensions(q: &Poset) -> BigInt {
    let mut ways = vec![BigInt::zero(); 1 << q.size];
    ways[0] = BigInt::one();
    for s in q.down_sets().into_iter().skip(1) {
        let mut total = BigInt::zero();
        for x in bits(q.maximal_in(s)) {
            total += &ways[(s & !(1 << x)) as usize];
        }
        ways[s as usize] = total;
    }
    ways[q.full() as usize].clone()
}

/// `e_1, ..., e_d`, the surjective order-preserving map counts, from
/// `Ω(Q, k) = sum_s e_s C(k, s)` at `k = 1..=d`. Index 0 holds `e_0 = 0`.
pub fn surjective_counts(q: &Poset) -> Result<Vec<BigInt>> {
    let d = q.size;
    let mut e = vec![BigInt::zero(); d + 1];
    for k in 1..=d {
        let mut v = order_polynomial(q, k as u64)?;
        for (s, es) in e.iter().enumerate().take(k).skip(1) {
            v -= es * binomial(k as i64, s as i64);
        }
        e[k] = v;
    }
    Ok(e)
}

/// Value tables and counts attached to a poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderData {
    /// `Ω(Q, k)` for `k = 0..=k_max`.
    pub omega: Vec<BigInt>,
    /// `Ω̄(Q, k)` for `k = 0..=k_max`.
    pub strict: Vec<BigInt>,
    pub linear_extensions: BigInt,
    /// `e_0 = 0, e_1, ..., e_d`.
    pub surjective: Vec<BigInt>,
}

impl OrderData {
    pub fn new(q: &Poset, k_max: u64) -> Result<Self> {
        Ok(Self {
            omega: (0..=k_max).map(|k| order_polynomial(q, k)).collect::<Result<_>>()?,
            strict: (0..=k_max).map(|k| strict_order_polynomial(q, k)).collect::<Result<_>>()?,
            linear_extensions: linear_extensions(q),
            surjective: surjective_counts(q)?,
        })
    }
}

/// `Ω(Q, ·)` as a polynomial, interpolated at `k = 1..=d+1`.
pub fn order_polynomial_poly(q: &Poset) -> Result<Polynomial> {
    let d = q.size as i64;
    let xs: Vec<i64> = (1..=d + 1).collect();
    let ys = xs.iter().map(|&k| order_polynomial(q, k as u64)).collect::<Result<Vec<_>>>()?;
    Polynomial::interpolate(&xs, &ys)
}

/// Reciprocity and coefficient identities of the order polynomial, for
/// `1 <= k <= k_max`. The graded clauses are skipped for non-graded `Q`.
pub fn reciprocity_checks(q: &Poset, k_max: u64) -> Result<bool> {
    let d = q.size;
    if k_max < d as u64 + 2 {
        return Err(Error::Precondition(format!("k_max must be at least {}", d + 2)));
    }
    let poly = order_polynomial_poly(q)?;
    let data = OrderData::new(q, k_max)?;
    let e = rat_int(data.linear_extensions.clone());
    let sd = sign_pow(d as i64);

    for k in 1..=k_max as i64 {
        let omega = rat_int(data.omega[k as usize].clone());
        // the interpolant must reproduce every sample
        if poly.eval_int(k) != omega {
            return Ok(false);
        }
        if rat_int(data.strict[k as usize].clone()) != rat_int(sd) * poly.eval_int(-k) {
            return Ok(false);
        }
        let via_surjections: BigInt =
            (1..=d).map(|s| &data.surjective[s] * binomial(k, s as i64)).sum();
        if via_surjections != data.omega[k as usize] {
            return Ok(false);
        }
    }
    if poly.coeff(d) != &e / rat_int(factorial(d as u64)) {
        return Ok(false);
    }
    if let Some(r) = q.rank() {
        let r = r as i64;
        let expected = rat_int(r) * &e / rat_int(2 * factorial(d as u64 - 1));
        if poly.coeff(d - 1) != expected {
            return Ok(false);
        }
        for k in 0..=k_max as i64 {
            if poly.eval_int(-r - k) != rat_int(sd) * poly.eval_int(k) {
                return Ok(false);
            }
        }
        if BigInt::from(2) * &data.surjective[d - 1] != BigInt::from(d as i64 + r - 1) * &data.linear_extensions {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{f : Q -> [0, 1] order-preserving}`, with vertices the indicator
/// vectors of up-sets.
pub fn order_polytope(q: &Poset) -> Result<LatticePolytope> {
    if q.size > MAX_ORDER_POLYTOPE_SIZE {
        return Err(Error::Scale(format!("order polytope of a poset with {} > {} elements", q.size, MAX_ORDER_POLYTOPE_SIZE)));
    }
    let points: Vec<Vec<i64>> =
        q.up_sets().into_iter().map(|s| (0..q.size).map(|x| i64::from(s >> x & 1 == 1)).collect()).collect();
    LatticePolytope::hull_from_vertices(&points)
}

/// Number of covers in `Q` with a bottom and top adjoined.
pub fn bounded_cover_count(q: &Poset) -> usize {
    let minimal = (0..q.size).filter(|&x| q.below[x] == 0).count();
    let maximal = (0..q.size).filter(|&x| q.above[x] == 0).count();
    q.covers.len() + minimal + maximal
}

/// Lattice counts of `kO(Q)` against `Ω(Q, k+1)` and `Ω̄(Q, k-1)`, and
/// the volume against `e(Q)/d!`, for `k <= k_max`.
pub fn order_ehrhart_checks(q: &Poset, k_max: u64) -> Result<bool> {
    let d = q.size;
    let p = order_polytope(q)?;
    let counts = count_range(&p, (k_max as usize).max(d));
    for k in 0..=k_max {
        let c = counts.get(k as usize);
        if BigInt::from(c.total) != order_polynomial(q, k + 1)? {
            return Ok(false);
        }
        if k >= 1 && BigInt::from(c.interior) != strict_order_polynomial(q, k - 1)? {
            return Ok(false);
        }
    }
    let e = interpolate_ehrhart(&counts)?;
    Ok(e.volume() == rat_int(linear_extensions(q)) / rat_int(factorial(d as u64)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderBoundaryVolume {
    /// `((3 - d) e(Q) + 2 e_{d-1}(Q)) / (d-1)!`.
    pub general: Rational,
    /// `(r + 2) e(Q) / (d-1)!`, for graded `Q`.
    pub graded: Option<Rational>,
}

pub fn order_boundary_volume(q: &Poset) -> Result<OrderBoundaryVolume> {
    let d = q.size;
    let e = linear_extensions(q);
    let es = surjective_counts(q)?;
    let fact = rat_int(factorial(d as u64 - 1));
    let general = rat_int(BigInt::from(3 - d as i64) * &e + BigInt::from(2) * &es[d - 1]) / &fact;
    let graded = q.rank().map(|r| rat_int(BigInt::from(r + 2) * &e) / &fact);
    Ok(OrderBoundaryVolume { general, graded })
}

/// `(r+2) O(Q)` moved so that its unique interior lattice point is the
/// origin. Checks that the result is reflexive and that `Ω(Q, ·)` vanishes
/// at `-1, ..., -r` with `Ω(Q, -r-1) = (-1)^d`.
pub fn reflexive_dilate(q: &Poset) -> Result<LatticePolytope> {
    let r = q.rank().ok_or_else(|| Error::Precondition("poset is not graded".into()))?;
    let poly = order_polynomial_poly(q)?;
    for k in 1..=r as i64 {
        if !poly.eval_int(-k).is_zero() {
            return Err(Error::Inconsistency(format!("order polynomial does not vanish at -{k}")));
        }
    }
    if poly.eval_int(-(r as i64) - 1) != rat_int(sign_pow(q.size as i64)) {
        return Err(Error::Inconsistency("order polynomial at -r-1 is not (-1)^d".into()));
    }
    let p = order_polytope(q)?.dilate(r as i64 + 2)?;
    let inside = lattice_points(&p, 1, true);
    if inside.len() != 1 {
        return Err(Error::Inconsistency(format!("(r+2)-dilate has {} interior lattice points", inside.len())));
    }
    let shift: Vec<i64> = inside[0].iter().map(|x| -x).collect();
    let centred = p.translate(&shift)?;
    if !is_reflexive(&centred)? {
        return Err(Error::Inconsistency("centred (r+2)-dilate is not reflexive".into()));
    }
    Ok(centred)
}

/// The reflexive volume identity for graded `Q` and, for odd `d`, the
/// vanishing alternating sum, both evaluated on `Ω(Q, m(r+2)+1)`.
pub fn order_reflexive_identities(q: &Poset) -> Result<bool> {
    let r = q.rank().ok_or_else(|| Error::Precondition("poset is not graded".into()))? as i64;
    let d = q.size as i64;
    let omega = |m: i64| order_polynomial(q, (m * (r + 2) + 1) as u64);
    let n = d / 2;
    let mut rhs = BigInt::zero();
    for m in 0..=n {
        let c = sign_pow(n + m) * (binomial(d, n - m) + sign_pow(d - 1) * binomial(d, n + m + 1));
        rhs += c * omega(m)?;
    }
    if BigInt::from(r + 2).pow(d as u32) * linear_extensions(q) != rhs {
        return Ok(false);
    }
    if d % 2 == 1 {
        let big_n = (d + 1) / 2;
        let mut g = BigInt::zero();
        for m in 0..=big_n {
            g += sign_pow(big_n + m) * binomial(d + 2, big_n - m) * omega(m)?;
        }
        if !g.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All posets on `n` elements up to isomorphism, each given by a natural
/// labelling (`x < y` only if `x < y` as integers).
pub fn enumerate_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).unwrap();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let rel = |i: usize, j: usize| i < j && mask >> index(i, j) & 1 == 1;
        let closed = (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(rel(i, j) && rel(j, k)) || rel(i, k)))
        });
        if !closed {
            continue;
        }
        // canonical form: least relation matrix over relabellings
        let canon = perms
            .iter()
            .map(|p| {
                let mut m = vec![false; n * n];
                for &(i, j) in &pairs {
                    if rel(i, j) {
                        m[p[i] * n + p[j]] = true;
                    }
                }
                m
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            let relations: Vec<(usize, usize)> = pairs.iter().copied().filter(|&(i, j)| rel(i, j)).collect();
            out.push(Poset::new(n, &relations).expect("natural labelling is acyclic"));
        }
    }
    out
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn n_poset() -> Poset {
        // a < b < c and a < d
        Poset::new(4, &[(0, 1), (1, 2), (0, 3)]).unwrap()
    }

    fn v_poset() -> Poset {
        Poset::new(3, &[(0, 1), (0, 2)]).unwrap()
    }

    /// Every map `Q -> C_k`, tested directly.
    fn brute(q: &Poset, k: u64, strict: bool) -> u64 {
        if k == 0 {
            return 0;
        }
        let d = q.size();
        let mut count = 0;
        let mut f = vec![0u64; d];
        loop {
            let ok = (0..d).all(|x| {
                (0..d).all(|y| !q.less(x, y) || if strict { f[x] < f[y] } else { f[x] <= f[y] })
            });
            if ok {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == d {
                    return count;
                }
                f[i] += 1;
                if f[i] < k {
                    break;
                }
                f[i] = 0;
                i += 1;
            }
        }
    }

    fn brute_surjective(q: &Poset, s: u64) -> u64 {
        let d = q.size();
        let mut count = 0;
        let mut f = vec![0u64; d];
        loop {
            let ok = (0..d).all(|x| (0..d).all(|y| !q.less(x, y) || f[x] <= f[y]));
            let onto = (0..s).all(|v| f.contains(&v));
            if ok && onto {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == d {
                    return count;
                }
                f[i] += 1;
                if f[i] < s {
                    break;
                }
                f[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn closure_and_covers() {
        let q = Poset::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(q.covers(), &[(0, 1), (1, 2)]);
        assert!(q.less(0, 2));
        assert!(Poset::new(2, &[(0, 1), (1, 0)]).is_err());
        assert!(Poset::new(2, &[(0, 5)]).is_err());
    }

    #[test]
    fn grading() {
        assert_eq!(Poset::chain(3).unwrap().rank(), Some(2));
        assert_eq!(Poset::antichain(3).unwrap().rank(), Some(0));
        assert_eq!(v_poset().rank(), Some(1));
        assert_eq!(n_poset().rank(), None);
    }

    #[test]
    fn order_polynomial_examples() {
        let c3 = Poset::chain(3).unwrap();
        assert_eq!(order_polynomial(&c3, 2).unwrap(), BigInt::from(4));
        assert_eq!(strict_order_polynomial(&c3, 3).unwrap(), BigInt::from(1));
        let a3 = Poset::antichain(3).unwrap();
        assert_eq!(order_polynomial(&a3, 2).unwrap(), BigInt::from(8));
        assert_eq!(strict_order_polynomial(&a3, 2).unwrap(), BigInt::from(8));
    }

    #[test]
    fn dp_matches_brute_force() {
        for n in 1..=4 {
            for q in enumerate_posets(n) {
                for k in 0..=4 {
                    assert_eq!(order_polynomial(&q, k).unwrap(), BigInt::from(brute(&q, k, false)));
                    assert_eq!(strict_order_polynomial(&q, k).unwrap(), BigInt::from(brute(&q, k, true)));
                }
                let es = surjective_counts(&q).unwrap();
                for s in 1..=n {
                    assert_eq!(es[s], BigInt::from(brute_surjective(&q, s as u64)));
                }
                assert_eq!(linear_extensions(&q), es[n]);
            }
        }
    }

    #[test]
    fn linear_extension_examples() {
        assert_eq!(linear_extensions(&Poset::antichain(3).unwrap()), BigInt::from(6));
        assert_eq!(linear_extensions(&Poset::chain(4).unwrap()), BigInt::from(1));
        assert_eq!(linear_extensions(&n_poset()), BigInt::from(3));
    }

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 16, 63]);
    }

    #[test]
    fn reciprocity() {
        assert!(reciprocity_checks(&Poset::chain(3).unwrap(), 5).unwrap());
        assert!(reciprocity_checks(&Poset::antichain(2).unwrap(), 4).unwrap());
        assert!(reciprocity_checks(&n_poset(), 6).unwrap());
    }

    #[test]
    fn order_polytopes() {
        let cube = order_polytope(&Poset::antichain(3).unwrap()).unwrap();
        assert_eq!((cube.vertices().len(), cube.facets().len()), (8, 6));
        let c3 = Poset::chain(3).unwrap();
        let simplex = order_polytope(&c3).unwrap();
        assert_eq!((simplex.vertices().len(), simplex.facets().len()), (4, 4));
        assert_eq!(order_polytope(&v_poset()).unwrap().vertices().len(), 5);
        for q in enumerate_posets(4) {
            assert_eq!(order_polytope(&q).unwrap().facets().len(), bounded_cover_count(&q));
        }
    }

    #[test]
    fn ehrhart_identities() {
        assert!(order_ehrhart_checks(&Poset::chain(3).unwrap(), 4).unwrap());
        assert!(order_ehrhart_checks(&Poset::antichain(2).unwrap(), 3).unwrap());
        assert!(order_ehrhart_checks(&v_poset(), 4).unwrap());
    }

    #[test]
    fn boundary_volumes() {
        let v = order_boundary_volume(&Poset::antichain(3).unwrap()).unwrap();
        assert_eq!((v.general.clone(), v.graded.clone()), (rat(6, 1), Some(rat(6, 1))));
        let v = order_boundary_volume(&Poset::chain(4).unwrap()).unwrap();
        assert_eq!(v.graded, Some(rat(5, 6)));
        assert_eq!(v.general, rat(5, 6));
        let q = n_poset();
        let v = order_boundary_volume(&q).unwrap();
        assert_eq!(v.graded, None);
        assert_eq!(v.general, order_polytope(&q).unwrap().boundary_volume_direct());
    }

    #[test]
    fn reflexive_dilates() {
        let a3 = reflexive_dilate(&Poset::antichain(3).unwrap()).unwrap();
        assert_eq!(a3, crate::fixtures::centered_cube(3));
        let c2 = reflexive_dilate(&Poset::chain(2).unwrap()).unwrap();
        assert_eq!(c2.vertices().len(), 3);
        reflexive_dilate(&Poset::chain(3).unwrap()).unwrap();
        assert!(matches!(reflexive_dilate(&n_poset()), Err(Error::Precondition(_))));
    }

    #[test]
    fn reflexive_identities() {
        assert!(order_reflexive_identities(&Poset::antichain(3).unwrap()).unwrap());
        assert!(order_reflexive_identities(&Poset::antichain(2).unwrap()).unwrap());
        assert!(order_reflexive_identities(&Poset::chain(3).unwrap()).unwrap());
    }
}
