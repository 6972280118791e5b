use serde::Serialize;

use super::LatticePolytope;
use crate::counting::lattice_points;
use crate::error::{Error, Result};
use crate::linalg::{hermite_normal_form, smith_normal_form, IntMatrix};
use crate::scalar::{sub_vec, Scalar};

/// The group `Z^{d+1} / <(v, 1) : v vertex>` of a simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct QuotientGroup<T: Scalar> {
    /// Full Smith diagonal, ones included.
    #[serde(with = "crate::io::ints")]
    pub invariant_factors: Vec<T>,
    #[serde(with = "crate::io::int")]
    pub order: T,
    pub cyclic: bool,
}

impl<T: Scalar> LatticePolytope<T> {
    /// A lattice point of `P` and a basis (as columns) of the lattice
    /// generated by differences of lattice points of `P`.
    pub fn spanning_sublattice(&self) -> (Vec<T>, IntMatrix<T>) {
        let d = self.dim();
        let pts = lattice_points(self, &T::one(), false);
        let origin = pts[0].clone();
        let diffs: Vec<Vec<T>> = pts.iter().skip(1).map(|p| sub_vec(p, &origin)).collect();
        if d == 0 {
            return (origin, IntMatrix::identity(0));
        }
        let m = IntMatrix::from_rows(diffs, d).expect("rows of length d");
        let h = hermite_normal_form(&m);
        let basis = h.basis_rows();
        (
            origin,
            IntMatrix::from_columns(&basis, d).expect("d columns"),
        )
    }

    /// Index of the lattice affinely generated by `P ∩ Z^d` in `Z^d`.
    pub fn spanning_index(&self) -> T {
        if self.dim() == 0 {
            return T::one();
        }
        let (_, b) = self.spanning_sublattice();
        b.determinant().expect("square").abs()
    }

    pub fn is_spanning(&self) -> bool {
        self.spanning_index().is_one()
    }

    /// `P` in the coordinates of the lattice spanned by the columns of `b`:
    /// the vertices become `b^{-1} v`.
    pub fn sublattice_view(&self, b: &IntMatrix<T>) -> Result<Self> {
        let d = self.dim();
        if b.rows() != d || b.cols() != d {
            return Err(Error::WrongDimension {
                expected: d,
                found: b.rows(),
            });
        }
        let det = b.determinant()?;
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let adj = b.adjugate()?;
        let mut out = Vec::with_capacity(self.num_vertices());
        for v in self.vertices() {
            let y = adj.mul_vec(v);
            if y.iter().any(|x| !(x.clone() % det.clone()).is_zero()) {
                return Err(Error::NotInLattice(
                    v.iter().map(|x| x.to_string()).collect(),
                ));
            }
            out.push(y.into_iter().map(|x| x / det.clone()).collect());
        }
        Self::new(out)
    }

    /// `P`, translated to put one of its lattice points at the origin, as a
    /// polytope in the lattice its own lattice points span.
    pub fn spanning_view(&self) -> Self {
        let (origin, b) = self.spanning_sublattice();
        let moved = Self::new(
            self.vertices()
                .iter()
                .map(|v| sub_vec(v, &origin))
                .collect(),
        )
        .expect("translate");
        moved
            .sublattice_view(&b)
            .expect("lattice points lie in their own span")
    }

    pub fn quotient_group(&self) -> Result<QuotientGroup<T>> {
        self.require_simplex()?;
        let d = self.dim();
        let cols: Vec<Vec<T>> = self
            .vertices()
            .iter()
            .map(|v| {
                let mut c = v.clone();
                c.push(T::one());
                c
            })
            .collect();
        let m = IntMatrix::from_columns(&cols, d + 1)?;
        let s = smith_normal_form(&m);
        let cyclic = s.diagonal.iter().filter(|x| !x.is_one()).count() <= 1;
        Ok(QuotientGroup {
            order: s.nonzero_product(),
            invariant_factors: s.diagonal,
            cyclic,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    type P = LatticePolytope<i64>;

    #[test]
    fn spanning() {
        for d in 1..=4 {
            assert!(catalog::cube::<i64>(d).is_spanning());
        }
        assert!(catalog::dilated_simplex::<i64>(2, 2).is_spanning());
        let ex: P = catalog::nonspanning_thin_simplex();
        assert_eq!(ex.spanning_index(), 2);
        assert!(!ex.is_spanning());
    }

    #[test]
    fn sublattice_view_identity_and_scaling() {
        let c: P = catalog::cube(3);
        let v = c.sublattice_view(&IntMatrix::identity(3)).unwrap();
        assert_eq!(v.vertices(), c.vertices());
        let two = IntMatrix::<i64>::from_i64(&[&[2, 0], &[0, 2]]);
        let doubled: P = catalog::dilated_simplex(2, 2);
        assert!(doubled
            .sublattice_view(&two)
            .unwrap()
            .is_unimodularly_equivalent(&catalog::standard_simplex(2)));
        let odd = P::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(
            odd.sublattice_view(&two),
            Err(Error::NotInLattice(_))
        ));
    }

    /// Invariant factors as quotients of gcds of k-minors of the vertex matrix.
    fn determinantal_factors(s: &P) -> Vec<i64> {
        let n = s.dim() + 1;
        let cols: Vec<Vec<i64>> = s
            .vertices()
            .iter()
            .map(|v| [v.clone(), vec![1]].concat())
            .collect();
        let m = IntMatrix::from_columns(&cols, n).unwrap();
        let mut divisors = vec![1i64];
        for k in 1..=n {
            let mut g = 0i64;
            crate::polytope::for_each_combination(n, k, |rows| {
                crate::polytope::for_each_combination(n, k, |cs| {
                    let minor: Vec<Vec<i64>> = rows
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m[(r, c)]).collect())
                        .collect();
                    g = num_integer::gcd(
                        g,
                        IntMatrix::from_rows(minor, k)
                            .unwrap()
                            .determinant()
                            .unwrap(),
                    );
                });
            });
            divisors.push(g);
        }
        (1..=n).map(|k| divisors[k] / divisors[k - 1]).collect()
    }

    #[test]
    fn quotient_groups() {
        let q = catalog::standard_simplex::<i64>(3)
            .quotient_group()
            .unwrap();
        assert_eq!(q.order, 1);
        assert!(q.cyclic);
        let q = catalog::dilated_simplex::<i64>(2, 2)
            .quotient_group()
            .unwrap();
        assert_eq!(q.invariant_factors, vec![1, 2, 2]);
        assert!(!q.cyclic);
        let ex: P = catalog::nonspanning_thin_simplex();
        let q = ex.quotient_group().unwrap();
        let det = IntMatrix::from_columns(
            &ex.vertices()
                .iter()
                .map(|v| [v.clone(), vec![1]].concat())
                .collect::<Vec<_>>(),
            5,
        )
        .unwrap()
        .determinant()
        .unwrap();
        assert_eq!(q.order, det.abs());
        assert_eq!(q.invariant_factors, determinantal_factors(&ex));
        assert_eq!(q.invariant_factors, vec![1, 1, 1, 4, 4]);
        assert!(catalog::cube::<i64>(2).quotient_group().is_err());
    }
}
