//! Boundary volume and volume from the boundary and total counts of the
//! first few dilates.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{binomial, det_int, factorial, rat_int, sign_pow, solve_linear, IntMatrix, Rational, RationalMatrix};

/// `(d-1)! vol(∂P) = sum_m coeffs[m] · L_∂P(m)` for `m = 0..=n`, `n = ⌊d/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryFormulaCoeffs {
    pub d: usize,
    pub n: usize,
    pub coeffs: Vec<BigInt>,
}

impl BoundaryFormulaCoeffs {
    pub fn as_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| c.to_i64().expect("small coefficient")).collect()
    }

    /// `sum_m coeffs[m] · values[m]`.
    pub fn apply(&self, values: &[BigInt]) -> BigInt {
        self.coeffs.iter().zip(values).map(|(c, v)| c * v).sum()
    }
}

pub fn table1_coefficients(d: usize) -> BoundaryFormulaCoeffs {
    let n = d / 2;
    let (di, ni) = (d as i64, n as i64);
    let coeffs = (0..=ni)
        .map(|m| sign_pow(ni + m) * (binomial(di - 1, ni - m) + sign_pow(di - 1) * binomial(di - 1, ni + m)))
        .collect();
    BoundaryFormulaCoeffs { d, n, coeffs }
}

fn check_counts(counts: &[BigInt], expected: usize) -> Result<()> {
    if counts.len() != expected {
        return Err(Error::Arity { expected, got: counts.len() });
    }
    if !counts[0].is_one() {
        return Err(Error::Precondition(format!("the m = 0 boundary count must be 1, got {}", counts[0])));
    }
    Ok(())
}

/// Boundary volume from `L_∂P(0), ..., L_∂P(⌊d/2⌋)`, as an alternating
/// binomial sum.
pub fn boundary_volume_explicit(d: usize, boundary: &[BigInt]) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Dimension { expected: 1, actual: 0 });
    }
    check_counts(boundary, d / 2 + 1)?;
    let total = table1_coefficients(d).apply(boundary);
    Ok(Rational::new(total, factorial(d as u64 - 1)))
}

/// The two `n × n` matrices `(A, D)` whose determinant ratio is the boundary
/// volume.
pub fn boundary_matrices(d: usize, boundary: &[BigInt]) -> Result<(IntMatrix, IntMatrix)> {
    if d < 2 {
        return Err(Error::Dimension { expected: 2, actual: d });
    }
    let n = d / 2;
    check_counts(boundary, n + 1)?;
    let shift = BigInt::from(2 * (d - 2 * n));
    let power = |i: usize, j: usize| BigInt::from(i).pow((d + 1 - 2 * j) as u32);
    let mut a = IntMatrix::zeros(n, n);
    let mut dm = IntMatrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            dm[(i - 1, j - 1)] = power(i, j);
            a[(i - 1, j - 1)] = if j == 1 { &boundary[i] - &shift } else { power(i, j) };
        }
    }
    Ok((a, dm))
}

/// Boundary volume as `det A / det D`.
pub fn boundary_volume_matrix(d: usize, boundary: &[BigInt]) -> Result<Rational> {
    let (a, dm) = boundary_matrices(d, boundary)?;
    let den = det_int(&dm)?;
    if den.is_zero() {
        return Err(Error::Singular);
    }
    Ok(Rational::new(det_int(&a)?, den))
}

/// Solves `½ L_∂P(m) = sum_i m^{d-2i+1} c_{d-2i+1}` at `m = 1..=⌈d/2⌉` for
/// the coefficients `c_{d-1}, c_{d-3}, ...` in that order.
pub fn odd_step_coefficients(d: usize, boundary: &[BigInt]) -> Result<Vec<Rational>> {
    let k = d.div_ceil(2);
    if boundary.len() != k {
        return Err(Error::Arity { expected: k, got: boundary.len() });
    }
    let rows = (1..=k)
        .map(|m| (1..=k).map(|i| rat_int(BigInt::from(m).pow((d + 1 - 2 * i) as u32))).collect())
        .collect();
    let rhs: Vec<Rational> = boundary.iter().map(|b| Rational::new(b.clone(), BigInt::from(2))).collect();
    solve_linear(&RationalMatrix::from_rows(rows)?, &rhs)
}

/// Volume from `L_P(m)` and `L_∂P(m)` for `m = 0..=⌈d/2⌉`.
pub fn volume_general(d: usize, totals: &[BigInt], boundary: &[BigInt]) -> Result<Rational> {
    if d == 0 {
        return Err(Error::Dimension { expected: 1, actual: 0 });
    }
    let big_n = d.div_ceil(2);
    if totals.len() != big_n + 1 {
        return Err(Error::Arity { expected: big_n + 1, got: totals.len() });
    }
    check_counts(boundary, big_n + 1)?;
    let (di, ni) = (d as i64, big_n as i64);
    let mut sum = Rational::zero();
    for m in 0..=ni {
        let c = sign_pow(ni + m) * (binomial(di, ni - m) + sign_pow(di) * binomial(di, ni + m));
        let mu = m as usize;
        let term = rat_int(totals[mu].clone()) - Rational::new(boundary[mu].clone(), BigInt::from(2));
        sum += rat_int(c) * term;
    }
    Ok(sum / rat_int(factorial(d as u64)))
}

fn check_parity(d: usize, even: bool) -> Result<()> {
    if d.is_multiple_of(2) != even {
        return Err(Error::Parity { d, what: if even { "even" } else { "odd" } });
    }
    Ok(())
}

fn check_len(values: &[BigInt], expected: usize) -> Result<()> {
    if values.len() != expected {
        return Err(Error::Arity { expected, got: values.len() });
    }
    Ok(())
}

/// Even-dimensional volume from `|(mP)° ∩ Z^d|` and `|∂(mP) ∩ Z^d|`,
/// `m = 1..=d/2` (index 0 holds `m = 1`).
pub fn volume_macdonald_even(d: usize, interior: &[BigInt], boundary: &[BigInt]) -> Result<Rational> {
    check_parity(d, true)?;
    let h = d / 2;
    check_len(interior, h)?;
    check_len(boundary, h)?;
    let (di, hi) = (d as i64, h as i64);
    let mut sum: BigInt = sign_pow(hi) * binomial(di, hi);
    for m in 1..=hi {
        let k = (m - 1) as usize;
        sum += sign_pow(hi - m) * binomial(di, hi - m) * (BigInt::from(2) * &interior[k] + &boundary[k]);
    }
    Ok(Rational::new(sum, factorial(d as u64)))
}

/// Odd-dimensional volume from `|(mP)° ∩ Z^d|` and `|∂(mP) ∩ Z^d|`,
/// `m = 1..=(d+1)/2` (index 0 holds `m = 1`).
pub fn volume_kolodziejczyk_odd(d: usize, interior: &[BigInt], boundary: &[BigInt]) -> Result<Rational> {
    check_parity(d, false)?;
    let h = d.div_ceil(2);
    check_len(interior, h)?;
    check_len(boundary, h)?;
    let (di, hi) = (d as i64, h as i64);
    let mut sum = BigInt::zero();
    for m in 1..=hi {
        let k = (m - 1) as usize;
        sum += sign_pow(hi - m) * binomial(di + 1, hi - m) * m * (BigInt::from(2) * &interior[k] + &boundary[k]);
    }
    Ok(Rational::new(sum, factorial(d as u64 + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn table_rows() {
        let rows: [&[i64]; 8] = [
            &[-4, 2],
            &[0, -2, 1],
            &[12, -8, 2],
            &[0, 5, -4, 1],
            &[-40, 30, -12, 2],
            &[0, -14, 14, -6, 1],
            &[140, -112, 56, -16, 2],
            &[0, 42, -48, 27, -8, 1],
        ];
        for (k, row) in rows.iter().enumerate() {
            assert_eq!(table1_coefficients(k + 3).as_i64(), row.to_vec(), "d = {}", k + 3);
        }
    }

    #[test]
    fn explicit_form_examples() {
        assert_eq!(boundary_volume_explicit(3, &big(&[1, 6])).unwrap(), rat(4, 1));
        assert_eq!(boundary_volume_explicit(4, &big(&[1, 8, 32])).unwrap(), rat(8, 3));
        assert_eq!(boundary_volume_explicit(5, &big(&[1, 10, 50])).unwrap(), rat(4, 3));
        // segment and polygon: 2 endpoints; boundary point count
        assert_eq!(boundary_volume_explicit(1, &big(&[1])).unwrap(), rat(2, 1));
        assert_eq!(boundary_volume_explicit(2, &big(&[1, 7])).unwrap(), rat(7, 1));
    }

    #[test]
    fn matrix_form_examples() {
        assert_eq!(boundary_volume_matrix(3, &big(&[1, 6])).unwrap(), rat(4, 1));
        let (a, dm) = boundary_matrices(4, &big(&[1, 8, 32])).unwrap();
        assert_eq!(a, IntMatrix::from_i64_rows(&[vec![8, 1], vec![32, 2]]).unwrap());
        assert_eq!(dm, IntMatrix::from_i64_rows(&[vec![1, 1], vec![8, 2]]).unwrap());
        assert_eq!(boundary_volume_matrix(4, &big(&[1, 8, 32])).unwrap(), rat(8, 3));
        assert_eq!(boundary_volume_matrix(5, &big(&[1, 10, 50])).unwrap(), rat(4, 3));
    }

    #[test]
    fn forms_agree_on_synthetic_counts() {
        for d in 2..=12usize {
            let n = d / 2;
            let counts: Vec<BigInt> =
                std::iter::once(BigInt::one()).chain((1..=n).map(|m| BigInt::from(3 * m * m + 7 * m + d))).collect();
            assert_eq!(
                boundary_volume_explicit(d, &counts).unwrap(),
                boundary_volume_matrix(d, &counts).unwrap(),
                "d = {d}"
            );
        }
    }

    #[test]
    fn vandermonde_part_is_invertible() {
        for d in 3..=12 {
            let counts = vec![BigInt::one(); d / 2 + 1];
            let (_, dm) = boundary_matrices(d, &counts).unwrap();
            assert!(!det_int(&dm).unwrap().is_zero());
        }
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(boundary_volume_explicit(4, &big(&[1, 8])), Err(Error::Arity { expected: 3, got: 2 }));
        assert!(matches!(boundary_volume_explicit(4, &big(&[0, 8, 32])), Err(Error::Precondition(_))));
        assert!(matches!(volume_macdonald_even(3, &big(&[1]), &big(&[6])), Err(Error::Parity { .. })));
        assert!(matches!(volume_kolodziejczyk_odd(4, &big(&[1, 9]), &big(&[8, 32])), Err(Error::Parity { .. })));
    }

    #[test]
    fn volume_examples() {
        assert_eq!(volume_general(3, &big(&[1, 7, 25]), &big(&[1, 6, 18])).unwrap(), rat(4, 3));
        assert_eq!(volume_general(4, &big(&[1, 9, 41]), &big(&[1, 8, 32])).unwrap(), rat(2, 3));
        assert_eq!(volume_general(2, &big(&[1, 4]), &big(&[1, 4])).unwrap(), rat(1, 1));
        assert_eq!(volume_macdonald_even(4, &big(&[1, 9]), &big(&[8, 32])).unwrap(), rat(2, 3));
        assert_eq!(volume_kolodziejczyk_odd(3, &big(&[1, 7]), &big(&[6, 18])).unwrap(), rat(4, 3));
        // unit square: no interior point, four boundary points
        assert_eq!(volume_macdonald_even(2, &big(&[0]), &big(&[4])).unwrap(), rat(1, 1));
    }

    #[test]
    fn odd_step_system_for_the_four_cube() {
        // (m+1)^4: c_3 = 4, c_1 = 4; boundary counts (m+1)^4 - (m-1)^4
        let c = odd_step_coefficients(4, &big(&[16, 80])).unwrap();
        assert_eq!(c, vec![rat(4, 1), rat(4, 1)]);
    }
}
