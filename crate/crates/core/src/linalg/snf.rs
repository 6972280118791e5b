//! Smith normal form by repeated gcd elimination with a minimal-absolute-value
//! pivot.

use super::IntMatrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<T> {
    /// `d1 | d2 | ... | dk`, nonnegative, zeros last; `k = min(rows, cols)`.
    pub diagonal: Vec<T>,
    /// Unimodular `U` (rows x rows).
    pub left: IntMatrix<T>,
    /// Unimodular `V` (cols x cols) with `U * A * V = D`.
    pub right: IntMatrix<T>,
    /// `V^-1`, maintained alongside `V`.
    pub right_inverse: IntMatrix<T>,
}

impl<T: Scalar> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors different from one, including zeros for free summands.
    pub fn nontrivial_factors(&self) -> Vec<T> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Product of the nonzero diagonal entries.
    pub fn nonzero_product(&self) -> T {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero())
            .fold(T::one(), |a, d| a * d.clone())
    }

    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntMatrix<T> {
        let mut d = IntMatrix::zeros(rows, cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

pub fn smith_normal_form<T: Scalar>(a: &IntMatrix<T>) -> SmithForm<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut vi = IntMatrix::identity(n);
    let k = m.min(n);

    let swap_cols =
        |d: &mut IntMatrix<T>, v: &mut IntMatrix<T>, vi: &mut IntMatrix<T>, a: usize, b: usize| {
            d.swap_cols(a, b);
            v.swap_cols(a, b);
            vi.swap_rows(a, b);
        };
    // col[dst] += q col[src] on D and V, row[src] -= q row[dst] on V^-1
    let add_col = |d: &mut IntMatrix<T>,
                   v: &mut IntMatrix<T>,
                   vi: &mut IntMatrix<T>,
                   dst: usize,
                   src: usize,
                   q: &T| {
        d.add_col_multiple(dst, src, q);
        v.add_col_multiple(dst, src, q);
        vi.add_row_multiple(src, dst, &-q.clone());
    };

    for t in 0..k {
        // Minimal nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if !d[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        swap_cols(&mut d, &mut v, &mut vi, t, pj);

        loop {
            // Bring the smallest entry of row t / column t to the pivot.
            let mut best = (t, t);
            for i in t + 1..m {
                if !d[(i, t)].is_zero() && d[(i, t)].abs() < d[best].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..n {
                if !d[(t, j)].is_zero() && d[(t, j)].abs() < d[best].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
            } else if best.1 != t {
                swap_cols(&mut d, &mut v, &mut vi, t, best.1);
            }

            let pivot = d[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)].clone() / pivot.clone();
                if !q.is_zero() {
                    d.add_row_multiple(i, t, &-q.clone());
                    u.add_row_multiple(i, t, &-q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)].clone() / pivot.clone();
                if !q.is_zero() {
                    add_col(&mut d, &mut v, &mut vi, j, t, &-q);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(d[(i, j)].clone() % pivot.clone()).is_zero()));
            match bad {
                Some(i) => {
                    d.add_row_multiple(t, i, &T::one());
                    u.add_row_multiple(t, i, &T::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let diagonal = (0..k).map(|i| d[(i, i)].clone()).collect();
    SmithForm {
        diagonal,
        left: u,
        right: v,
        right_inverse: vi,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = IntMatrix<i64>;

    fn check(a: &M) -> SmithForm<i64> {
        let s = smith_normal_form(a);
        assert_eq!(
            &(&s.left * a) * &s.right,
            s.diagonal_matrix(a.rows(), a.cols())
        );
        assert!(s.left.is_unimodular());
        assert!(s.right.is_unimodular());
        assert_eq!(&s.right * &s.right_inverse, M::identity(a.cols()));
        for w in s.diagonal.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "{:?}", s.diagonal);
            } else {
                assert!(w[0] >= 0);
            }
        }
        s
    }

    #[test]
    fn identity_and_chain() {
        assert_eq!(check(&M::identity(3)).diagonal, vec![1, 1, 1]);
        assert_eq!(
            check(&M::from_i64(&[&[2, 0], &[0, 4]])).diagonal,
            vec![2, 4]
        );
    }

    #[test]
    fn non_chain_diagonal_is_fixed_up() {
        assert_eq!(
            check(&M::from_i64(&[&[2, 0], &[0, 3]])).diagonal,
            vec![1, 6]
        );
        assert_eq!(
            check(&M::from_i64(&[&[4, 0], &[0, 6]])).diagonal,
            vec![2, 12]
        );
    }

    #[test]
    fn rectangular_and_singular() {
        let s = check(&M::from_i64(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(s.diagonal, vec![1, 0]);
        let s = check(&M::from_i64(&[&[2, 4], &[6, 8], &[10, 12]]));
        assert_eq!(s.diagonal, vec![2, 4]);
    }

    #[test]
    fn dilated_triangle_group() {
        let s = check(&M::from_i64(&[&[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]));
        assert_eq!(s.diagonal, vec![1, 2, 2]);
    }
}
