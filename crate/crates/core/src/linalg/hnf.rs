//! Hermite normal form under unimodular row operations.
//!
//! Convention: `H = U * A` is lower-triangular in profile. Every nonzero row
//! has its pivot (last nonzero entry) strictly to the right of the pivot of
//! the row above it, pivots are positive, and every entry below a pivot lies
//! in `[0, pivot)`. Zero rows come first. The form is unique for the lattice
//! spanned by the rows of `A`.

use super::IntMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm<T> {
    pub h: IntMatrix<T>,
    /// Unimodular transform with `h = u * a`.
    pub u: IntMatrix<T>,
}

impl<T: Scalar> HermiteForm<T> {
    /// Nonzero rows of `h`: a basis of the row lattice of the input.
    pub fn basis_rows(&self) -> Vec<Vec<T>> {
        (0..self.h.rows())
            .filter(|&i| !self.h.is_zero_row(i))
            .map(|i| self.h.row(i).to_vec())
            .collect()
    }

    pub fn rank(&self) -> usize {
        (0..self.h.rows())
            .filter(|&i| !self.h.is_zero_row(i))
            .count()
    }
}

pub fn hermite_normal_form<T: Scalar>(a: &IntMatrix<T>) -> HermiteForm<T> {
    let (m, n) = (a.rows(), a.cols());
    // Mirror into the classical upper echelon form, reduce, mirror back.
    let mut mirrored = IntMatrix::zeros(m, n);
    for i in 0..m {
        for j in 0..n {
            mirrored[(i, j)] = a[(i, n - 1 - j)].clone();
        }
    }
    let (hu, uu) = upper_hermite(mirrored);
    let mut h = IntMatrix::zeros(m, n);
    let mut u = IntMatrix::zeros(m, m);
    for i in 0..m {
        for j in 0..n {
            h[(i, j)] = hu[(m - 1 - i, n - 1 - j)].clone();
        }
        for j in 0..m {
            u[(i, j)] = uu[(m - 1 - i, j)].clone();
        }
    }
    HermiteForm { h, u }
}

/// Classical row-style HNF: pivots move right going down, entries above a
/// pivot reduced into `[0, pivot)`, zero rows last.
fn upper_hermite<T: Scalar>(mut h: IntMatrix<T>) -> (IntMatrix<T>, IntMatrix<T>) {
    let (m, n) = (h.rows(), h.cols());
    let mut u = IntMatrix::identity(m);
    let mut pr = 0;
    for c in 0..n {
        if pr == m {
            break;
        }
        for k in pr + 1..m {
            if h[(k, c)].is_zero() {
                continue;
            }
            let a = h[(pr, c)].clone();
            let b = h[(k, c)].clone();
            let ext = a.extended_gcd(&b);
            let (g, x, y) = (ext.gcd, ext.x, ext.y);
            let r = -(b / g.clone());
            let s = a / g;
            h.combine_rows(pr, k, [&x, &y, &r, &s]);
            u.combine_rows(pr, k, [&x, &y, &r, &s]);
        }
        if h[(pr, c)].is_zero() {
            continue;
        }
        if h[(pr, c)].is_negative() {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        let pivot = h[(pr, c)].clone();
        for r in 0..pr {
            let q = h[(r, c)].div_floor(&pivot);
            if !q.is_zero() {
                h.add_row_multiple(r, pr, &-q.clone());
                u.add_row_multiple(r, pr, &-q);
            }
        }
        pr += 1;
    }
    debug_assert!(u.determinant().map(|d| d.abs().is_one()).unwrap_or(false));
    (h, u)
}

/// Checks the shape conditions of the lower Hermite form.
pub fn is_hermite_form<T: Scalar>(h: &IntMatrix<T>) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_nonzero = false;
    for i in 0..h.rows() {
        let Some(p) = (0..h.cols()).rev().find(|&j| !h[(i, j)].is_zero()) else {
            if seen_nonzero {
                return false;
            }
            continue;
        };
        seen_nonzero = true;
        if last_pivot.is_some_and(|lp| p <= lp) {
            return false;
        }
        let pivot = &h[(i, p)];
        if !pivot.is_positive() {
            return false;
        }
        for k in i + 1..h.rows() {
            let x = &h[(k, p)];
            if x.is_negative() || x >= pivot {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}
