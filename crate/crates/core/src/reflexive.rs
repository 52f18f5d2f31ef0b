//! Reflexivity: dual integrality and the equivalent count-based criteria,
//! the odd-dimensional relation, the reflexive volume formula and the
//! δ-vector bounds in dimensions 4 and 5.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::count::{count_range, DilationCounts};
use crate::ehrhart::{delta_vector, interpolate_ehrhart, DeltaVector};
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, rat, rat_int, sign_pow, Rational};
use crate::polytope::LatticePolytope;

/// `constant + sum_{m >= 1} totals[m] L_P(m) + boundaries[m] L_∂P(m)`.
/// Index 0 of both lists is unused (zero); the `m = 0` terms are folded
/// into the constant since `L_P(0) = L_∂P(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub constant: Rational,
    pub totals: Vec<Rational>,
    pub boundaries: Vec<Rational>,
}

impl LinearForm {
    fn zero(top: usize) -> Self {
        Self {
            constant: Rational::zero(),
            totals: vec![Rational::zero(); top + 1],
            boundaries: vec![Rational::zero(); top + 1],
        }
    }

    fn add_total(&mut self, m: usize, c: Rational) {
        if m == 0 {
            self.constant += c;
        } else {
            self.totals[m] += c;
        }
    }

    fn add_boundary(&mut self, m: usize, c: Rational) {
        if m == 0 {
            self.constant += c;
        } else {
            self.boundaries[m] += c;
        }
    }

    /// Highest dilation that appears.
    pub fn top(&self) -> usize {
        self.totals.len() - 1
    }

    /// Evaluates at counts indexed by `m` (entries for `m = 0` are ignored).
    pub fn eval(&self, totals: &[BigInt], boundaries: &[BigInt]) -> Rational {
        let mut v = self.constant.clone();
        for m in 1..=self.top() {
            if !self.totals[m].is_zero() {
                v += &self.totals[m] * rat_int(totals[m].clone());
            }
            if !self.boundaries[m].is_zero() {
                v += &self.boundaries[m] * rat_int(boundaries[m].clone());
            }
        }
        v
    }

    fn all_coeffs(&self) -> impl Iterator<Item = &Rational> {
        std::iter::once(&self.constant).chain(&self.totals).chain(&self.boundaries)
    }

    /// Scaled to coprime integer coefficients with a positive coefficient
    /// on the highest total `L_P(top)`.
    pub fn normalized(&self) -> Self {
        let den = self.all_coeffs().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self
            .all_coeffs()
            .map(|c| (c * rat_int(den.clone())).to_integer())
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c));
        if num.is_zero() {
            return self.clone();
        }
        let mut scale = Rational::new(den, num);
        if self.totals[self.top()].is_negative() {
            scale = -scale;
        }
        let s = |v: &Vec<Rational>| v.iter().map(|c| c * &scale).collect();
        Self { constant: &self.constant * &scale, totals: s(&self.totals), boundaries: s(&self.boundaries) }
    }

    /// Integer coefficients as `(constant, totals[1..], boundaries[1..])`.
    pub fn integer_parts(&self) -> Option<(BigInt, Vec<BigInt>, Vec<BigInt>)> {
        let int = |c: &Rational| c.is_integer().then(|| c.to_integer());
        let list = |v: &[Rational]| v[1..].iter().map(int).collect::<Option<Vec<_>>>();
        Some((int(&self.constant)?, list(&self.totals)?, list(&self.boundaries)?))
    }
}

/// The alternating sum whose vanishing characterises reflexive polytopes
/// among Fano ones, as a form in `L_P(m)`, `L_∂P(m)`, `m <= ⌈d/2⌉`.
pub fn gorenstein_f_form(d: usize) -> LinearForm {
    let big_n = d.div_ceil(2);
    let (di, ni) = (d as i64, big_n as i64);
    let mut form = LinearForm::zero(big_n);
    for m in 0..=ni {
        let c = rat_int(sign_pow(ni + m) * binomial(2 * ni, ni + m));
        let mu = m as usize;
        if d.is_multiple_of(2) {
            form.add_total(mu, &c * rat_int(di));
            form.add_boundary(mu, -&c * rat_int(ni + m));
        } else {
            form.add_total(mu, &c * rat_int(m * di));
            form.add_boundary(mu, &c * (rat_int(ni * ni - m * m) - rat(m * di, 2)));
        }
    }
    form
}

/// `sum_m (-1)^{N+m} C(d+2, N-m) L_P(m)`, which vanishes on reflexive
/// polytopes of odd dimension `d`.
pub fn odd_relation_g_form(d: usize) -> Result<LinearForm> {
    if d.is_multiple_of(2) {
        return Err(Error::Parity { d, what: "odd" });
    }
    let big_n = d.div_ceil(2);
    let (di, ni) = (d as i64, big_n as i64);
    let mut form = LinearForm::zero(big_n);
    for m in 0..=ni {
        form.add_total(m as usize, rat_int(sign_pow(ni + m) * binomial(di + 2, ni - m)));
    }
    Ok(form)
}

fn need(counts: &DilationCounts, m: usize) -> Result<()> {
    if counts.m_max() < m {
        return Err(Error::Arity { expected: m + 1, got: counts.rows.len() });
    }
    Ok(())
}

pub fn gorenstein_f_from_counts(counts: &DilationCounts) -> Result<Rational> {
    let form = gorenstein_f_form(counts.dim).normalized();
    need(counts, form.top())?;
    Ok(form.eval(&counts.totals(), &counts.boundaries()))
}

pub fn odd_relation_g_from_counts(counts: &DilationCounts) -> Result<Rational> {
    let form = odd_relation_g_form(counts.dim)?;
    need(counts, form.top())?;
    Ok(form.eval(&counts.totals(), &counts.boundaries()))
}

pub fn gorenstein_f(p: &LatticePolytope) -> Result<Rational> {
    gorenstein_f_from_counts(&count_range(p, p.dim().div_ceil(2)))
}

pub fn odd_relation_g(p: &LatticePolytope) -> Result<Rational> {
    odd_relation_g_from_counts(&count_range(p, p.dim().div_ceil(2)))
}

/// Dual integrality, for Fano polytopes.
pub fn is_reflexive(p: &LatticePolytope) -> Result<bool> {
    if !p.is_fano() {
        return Err(Error::Precondition("polytope is not Fano".into()));
    }
    Ok(p.dual()?.is_integral())
}

/// Volume of a reflexive polytope from `L_P(0), ..., L_P(⌊d/2⌋)`.
pub fn reflexive_volume(d: usize, totals: &[BigInt]) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Dimension { expected: 1, actual: 0 });
    }
    let n = d / 2;
    if totals.len() != n + 1 {
        return Err(Error::Arity { expected: n + 1, got: totals.len() });
    }
    if !totals[0].is_one() {
        return Err(Error::Precondition(format!("L_P(0) must be 1, got {}", totals[0])));
    }
    let (di, ni) = (d as i64, n as i64);
    let sum: BigInt = (0..=ni)
        .map(|m| {
            sign_pow(ni + m)
                * (binomial(di, ni - m) + sign_pow(di - 1) * binomial(di, ni + m + 1))
                * &totals[m as usize]
        })
        .sum();
    Ok(Rational::new(sum, factorial(d as u64)))
}

pub fn palindrome_check(delta: &DeltaVector) -> bool {
    delta.is_palindromic()
}

/// `L_P(m) = L_∂P(m) + L_P(m-1)` for `1 <= m <= m_max`.
pub fn condition_ii(counts: &DilationCounts) -> bool {
    (1..=counts.m_max()).all(|m| {
        let (c, prev) = (counts.get(m), counts.get(m - 1));
        c.total == c.boundary + prev.total
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VolumeBound {
    /// `d! vol(P)`.
    pub lhs: BigInt,
    /// `(d-1) |P ∩ Z^d| - d^2 + 3`.
    pub rhs: BigInt,
    pub equality: bool,
    pub delta: DeltaVector,
}

/// Lower bound on the normalized volume for polytopes with interior
/// points. On equality the δ-vector must be `(1, k, ..., k, 1)` with
/// `k = |P ∩ Z^d| - d - 1`.
pub fn volume_lower_bound_check(p: &LatticePolytope) -> Result<VolumeBound> {
    let d = p.dim();
    let counts = count_range(p, d);
    let l1 = counts.get(1);
    if l1.interior == 0 {
        return Err(Error::Precondition("no interior lattice point".into()));
    }
    let delta = delta_vector(&counts)?;
    let lhs = delta.sum();
    let di = d as i64;
    let rhs = BigInt::from(di - 1) * l1.total - di * di + 3;
    if lhs < rhs {
        return Err(Error::Inconsistency(format!("normalized volume {lhs} is below the bound {rhs}")));
    }
    let equality = lhs == rhs;
    if equality {
        let k: BigInt = BigInt::from(l1.total) - di - 1;
        let expected: Vec<BigInt> =
            (0..=d).map(|i| if i == 0 || i == d { BigInt::one() } else { k.clone() }).collect();
        if delta.0 != expected {
            return Err(Error::Inconsistency(format!("equality case with delta {:?}", delta.0)));
        }
    }
    Ok(VolumeBound { lhs, rhs, equality, delta })
}

/// One inequality `lhs <= rhs` between integer expressions in counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub label: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl Inequality {
    pub fn new(label: &str, lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Self {
        Self { label: label.to_owned(), lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }

    pub fn tight(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn slack(&self) -> BigInt {
        &self.rhs - &self.lhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilationBounds {
    /// The palindromic δ-vector written in terms of `L_P(1), L_P(2)`.
    pub delta: DeltaVector,
    pub bounds: Vec<Inequality>,
}

/// δ-vector of a reflexive polytope of dimension 4 or 5 from its first
/// two dilation counts.
pub fn reflexive_delta(d: usize, l1: &BigInt, l2: &BigInt) -> Result<DeltaVector> {
    let one = BigInt::one();
    let entries = match d {
        4 => {
            let a: BigInt = l1 - 5;
            let b: BigInt = l2 - 5 * l1 + 10;
            vec![one.clone(), a.clone(), b, a, one]
        }
        5 => {
            let a: BigInt = l1 - 6;
            let b: BigInt = l2 - 6 * l1 + 15;
            vec![one.clone(), a.clone(), b.clone(), b, a, one]
        }
        _ => return Err(Error::Dimension { expected: 4, actual: d }),
    };
    Ok(DeltaVector(entries))
}

pub fn dilation_bounds_check(p: &LatticePolytope) -> Result<DilationBounds> {
    let d = p.dim();
    if d != 4 && d != 5 {
        return Err(Error::Dimension { expected: 4, actual: d });
    }
    if !is_reflexive(p)? {
        return Err(Error::Precondition("polytope is not reflexive".into()));
    }
    let counts = count_range(p, d);
    let l: Vec<BigInt> = counts.totals();
    let delta = reflexive_delta(d, &l[1], &l[2])?;
    if delta != delta_vector(&counts)? {
        return Err(Error::Inconsistency("palindromic delta disagrees with the counted one".into()));
    }
    let bounds = if d == 4 {
        vec![Inequality::new("6 L(1) <= L(2) + 15", 6 * &l[1], &l[2] + 15)]
    } else {
        vec![
            Inequality::new("7 L(1) <= L(2) + 21", 7 * &l[1], &l[2] + 21),
            Inequality::new("4 L(2) <= L(3) + 28", 4 * &l[2], &l[3] + 28),
        ]
    };
    Ok(DilationBounds { delta, bounds })
}

/// Every reflexivity criterion evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflexivityReport {
    pub is_fano: bool,
    pub dual_integral: bool,
    pub condition_ii_holds: bool,
    pub condition_iii_holds: bool,
    pub palindromic_delta: bool,
    pub f_value: Rational,
    pub g_value: Option<Rational>,
}

impl ReflexivityReport {
    /// Whether the count-based criteria all agree with dual integrality.
    pub fn consistent(&self) -> bool {
        if !self.is_fano {
            return !self.dual_integral;
        }
        let r = self.dual_integral;
        let g_ok = !r || self.g_value.as_ref().is_none_or(Zero::is_zero);
        self.condition_ii_holds == r
            && self.condition_iii_holds == r
            && self.palindromic_delta == r
            && self.f_value.is_zero() == r
            && g_ok
    }
}

pub fn reflexivity_report(p: &LatticePolytope) -> Result<ReflexivityReport> {
    let d = p.dim();
    let counts = count_range(p, d + 1);
    let is_fano = p.origin_in_interior() && counts.get(1).interior == 1;
    let dual_integral = p.origin_in_interior() && p.dual()?.is_integral();
    let e = interpolate_ehrhart(&counts)?;
    let delta = delta_vector(&counts)?;
    Ok(ReflexivityReport {
        is_fano,
        dual_integral,
        condition_ii_holds: condition_ii(&counts),
        condition_iii_holds: rat_int(d as i64) * e.volume() == e.boundary_volume(),
        palindromic_delta: palindrome_check(&delta),
        f_value: gorenstein_f_from_counts(&counts)?,
        g_value: if d % 2 == 1 { Some(odd_relation_g_from_counts(&counts)?) } else { None },
    })
}
