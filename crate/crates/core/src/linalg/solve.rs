use num_rational::Ratio;
use num_traits::Zero;

use super::matrix::row_reduce;
use super::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// One exact rational solution of `A x = b`, or `None` if the system is
/// inconsistent. Free variables are set to zero.
pub fn solve_rational<T: Scalar>(a: &IntMatrix<T>, b: &[T]) -> Option<Vec<Ratio<T>>> {
    assert_eq!(a.rows(), b.len(), "right-hand side has the wrong length");
    let n = a.cols();
    let mut m: Vec<Vec<Ratio<T>>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .chain(std::iter::once(&b[i]))
                .cloned()
                .map(Ratio::from_integer)
                .collect()
        })
        .collect();
    let pivots = row_reduce(&mut m, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Ratio::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][n].clone();
    }
    Some(x)
}

/// One integer solution of `A x = b`, or `None` if none exists.
pub fn solve_integer<T: Scalar>(a: &IntMatrix<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows(), b.len(), "right-hand side has the wrong length");
    let s = smith_normal_form(a);
    let c = s.left.mul_vec(b);
    let mut y = vec![T::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        let d = s.diagonal.get(i).cloned().unwrap_or_else(T::zero);
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            if !(ci.clone() % d.clone()).is_zero() {
                return None;
            }
            y[i] = ci.clone() / d;
        }
    }
    Some(s.right.mul_vec(&y))
}

/// `v` divided by the gcd of its entries.
pub fn primitive<T: Scalar>(v: &[T]) -> Result<Vec<T>> {
    let g = v.iter().fold(T::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x.clone() / g.clone()).collect())
}

/// A basis (as rows) of the saturated lattice `span_R(rows of A) ∩ Z^n`,
/// together with a unimodular `V` such that `x * V` expresses `x` in the
/// coordinates of a basis of `Z^n` extending it (the first `rank` entries
/// are the coordinates with respect to the returned basis).
pub fn saturated_row_basis<T: Scalar>(a: &IntMatrix<T>) -> (Vec<Vec<T>>, IntMatrix<T>) {
    let s = smith_normal_form(a);
    let r = s.rank();
    let basis = (0..r).map(|i| s.right_inverse.row(i).to_vec()).collect();
    (basis, s.right)
}

/// Integer vector normal to the rows of a `(n-1) x n` matrix, given by the
/// signed maximal minors. Zero iff the rows are dependent.
pub fn cofactor_normal<T: Scalar>(rows: &[Vec<T>], n: usize) -> Vec<T> {
    debug_assert_eq!(rows.len() + 1, n);
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<T>> = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = IntMatrix::from_rows(minor, n - 1)
                .and_then(|m| m.determinant())
                .expect("square minor");
            if j % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

/// Sign-normalizes a nonzero vector so its first nonzero entry is positive.
pub fn sign_normalized<T: Scalar>(v: Vec<T>) -> Vec<T> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}
