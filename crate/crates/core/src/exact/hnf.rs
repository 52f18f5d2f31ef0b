//! Row Hermite normal form and the lattice operations built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `h = u · m` with `u` unimodular and `h` in row Hermite normal form:
/// row echelon, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`. Zero rows come last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
}

fn sub_row_multiple(m: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        let v = &m[(src, j)] * q;
        m[(target, j)] -= v;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        m[(r, j)] = -m[(r, j)].clone();
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on the column below the pivot row
        loop {
            let pick = (r..rows)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(p) = pick else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = h[(i, col)].div_floor(&h[(r, col)]);
                sub_row_multiple(&mut h, i, r, &q);
                sub_row_multiple(&mut u, i, r, &q);
                if !h[(i, col)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[(i, col)].div_floor(&h[(r, col)]);
            sub_row_multiple(&mut h, i, r, &q);
            sub_row_multiple(&mut u, i, r, &q);
        }
        r += 1;
    }
    HermiteForm { h, u, rank: r }
}

/// Basis of the integer kernel `{x ∈ Z^n : M x = 0}` of a `k × n` matrix
/// given by its rows.
pub fn integer_kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
            .collect();
    }
    let mt = IntMatrix::from_rows(rows.to_vec()).expect("rectangular rows").transpose();
    let form = hermite_normal_form(&mt);
    (form.rank..n).map(|i| form.u.row(i).to_vec()).collect()
}

/// Lattice basis of `span_Q(vectors) ∩ Z^d`, in Hermite normal form.
pub fn saturation_basis(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(first) = vectors.first() else {
        return Vec::new();
    };
    let d = first.len();
    let kernel = integer_kernel(vectors, d);
    if kernel.len() == d {
        return Vec::new();
    }
    let sat = integer_kernel(&kernel, d);
    let form = hermite_normal_form(&IntMatrix::from_rows(sat).expect("rectangular rows"));
    (0..form.rank).map(|i| form.h.row(i).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{det_int, rank_int};

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn check_form(m: &IntMatrix, f: &HermiteForm) {
        assert_eq!(f.u.mul(m).unwrap(), f.h);
        assert_eq!(det_int(&f.u).unwrap().abs(), BigInt::from(1));
        // echelon with positive, reducing pivots
        let mut last_pivot: Option<usize> = None;
        for i in 0..f.h.rows() {
            let pivot = (0..f.h.cols()).find(|&j| !f.h[(i, j)].is_zero());
            match pivot {
                Some(j) => {
                    assert!(i < f.rank);
                    assert!(last_pivot.is_none_or(|p| j > p));
                    assert!(f.h[(i, j)].is_positive());
                    for k in 0..i {
                        assert!(!f.h[(k, j)].is_negative() && f.h[(k, j)] < f.h[(i, j)]);
                    }
                    last_pivot = Some(j);
                }
                None => assert!(i >= f.rank),
            }
        }
    }

    #[test]
    fn hnf_examples() {
        let m = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        let f = hermite_normal_form(&m);
        assert_eq!(f.h, m);
        check_form(&m, &f);

        let m = IntMatrix::from_i64_rows(&[vec![2, 4], vec![1, 3]]).unwrap();
        let f = hermite_normal_form(&m);
        assert_eq!(f.h, IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 2]]).unwrap());
        check_form(&m, &f);

        let m = IntMatrix::from_i64_rows(&[vec![0, 0]]).unwrap();
        let f = hermite_normal_form(&m);
        assert_eq!(f.h, m);
        assert_eq!(f.rank, 0);
    }

    #[test]
    fn hnf_rectangular_and_rank_deficient() {
        let m = IntMatrix::from_i64_rows(&[vec![3, 6, 9, 1], vec![1, 2, 3, 0], vec![4, 8, 12, 1], vec![0, 5, -7, 2]])
            .unwrap();
        let f = hermite_normal_form(&m);
        check_form(&m, &f);
        assert_eq!(f.rank, rank_int(&m));
    }

    #[test]
    fn hnf_preserves_det_up_to_sign() {
        let m = IntMatrix::from_i64_rows(&[vec![4, -2, 7], vec![3, 9, 1], vec![-5, 2, 2]]).unwrap();
        let f = hermite_normal_form(&m);
        assert_eq!(det_int(&f.h).unwrap().abs(), det_int(&m).unwrap().abs());
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(saturation_basis(&big(&[vec![2, 0]])), big(&[vec![1, 0]]));
        assert!(saturation_basis(&[]).is_empty());

        let input = big(&[vec![1, 1, 0], vec![0, 0, 1]]);
        let basis = saturation_basis(&input);
        assert_eq!(basis.len(), 2);
        assert_eq!(basis, big(&[vec![1, 1, 0], vec![0, 0, 1]]));

        // 2*(1,1,0) and (0,0,3) saturate to the same lattice
        assert_eq!(saturation_basis(&big(&[vec![2, 2, 0], vec![0, 0, 3]])), basis);

        // full rank saturates to Z^2
        assert_eq!(saturation_basis(&big(&[vec![2, 1], vec![0, 3]])), big(&[vec![1, 0], vec![0, 1]]));
    }

    #[test]
    fn kernel_is_annihilated() {
        let rows = big(&[vec![1, 2, 3], vec![2, 4, 7]]);
        let k = integer_kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        for v in &k {
            for r in &rows {
                let dot: BigInt = r.iter().zip(v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }
}
