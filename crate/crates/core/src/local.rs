//! The local h*-polynomial `l*_P = Σ_F (-1)^{dim P - dim F} h*_F g_{(F,P]*}`
//! and the identities it satisfies.
//!
//! `h*_F` is computed from the dilates of `F` in the lattice of its own
//! affine hull, which is the lattice of ambient points on that hull.

use rayon::prelude::*;
use serde::Serialize;

use crate::counting::{box_polynomial, hstar, interior_point_count, EhrhartData};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::polynomial::IntPolynomial;
use crate::polytope::{free_join, LatticePolytope};
use crate::poset::IntervalPolys;
use crate::scalar::Scalar;

/// Ehrhart and local data of every face, indexed like the face lattice.
#[derive(Clone, Debug)]
pub struct FaceData<T: Scalar> {
    /// `None` for the empty face.
    pub ehrhart: Vec<Option<EhrhartData<T>>>,
    pub lstar: Vec<IntPolynomial<T>>,
    /// `g_{[F,P)}` for each face `F`.
    pub g_up: Vec<IntPolynomial<T>>,
}

impl<T: Scalar> FaceData<T> {
    pub fn hstar(&self, face: usize) -> IntPolynomial<T> {
        self.ehrhart[face]
            .as_ref()
            .map_or_else(IntPolynomial::one, |e| e.hstar.clone())
    }
}

pub fn face_data<T: Scalar>(p: &LatticePolytope<T>) -> FaceData<T> {
    let fl = p.face_lattice();
    let ehrhart: Vec<Option<EhrhartData<T>>> = fl
        .faces()
        .par_iter()
        .map(|f| (f.dim >= 0).then(|| hstar(&p.face_polytope(f.vertices).expect("nonempty face"))))
        .collect();
    let mut polys = IntervalPolys::<T>::new(fl);
    let hs: Vec<IntPolynomial<T>> = ehrhart
        .iter()
        .map(|e| {
            e.as_ref()
                .map_or_else(IntPolynomial::one, |e| e.hstar.clone())
        })
        .collect();
    let lstar = (0..fl.len())
        .map(|g| {
            fl.interval(fl.bottom(), g)
                .into_iter()
                .map(|f| {
                    let term = &hs[f] * &polys.g(f, g, true);
                    if (fl.dim(g) - fl.dim(f)) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect();
    let g_up = (0..fl.len()).map(|f| polys.g(f, fl.top(), false)).collect();
    FaceData {
        ehrhart,
        lstar,
        g_up,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalChecks {
    /// `h*_P = Σ_F l*_F g_{[F,P)}`.
    pub decomposition: bool,
    /// `l*_P + g_P ≤ h*_P` coefficientwise.
    pub hstar_bound: bool,
    /// `l*_1 ≤ l*_i` for `2 ≤ i ≤ d`.
    pub lower_bound: bool,
    /// `l*_i = l*_{d+1-i}`.
    pub palindromic: bool,
    pub nonnegative: bool,
    /// `l*_0 = l*_{d+1} = 0` and `l*_1` is the interior point count.
    pub boundary: bool,
    /// `subdeg l* ≥ codeg P` and `deg l* ≤ deg P` unless `l* = 0`.
    pub degree_bounds: bool,
    /// Agreement with the box polynomial, for simplices.
    pub box_agreement: Option<bool>,
}

impl LocalChecks {
    pub fn all_pass(&self) -> bool {
        self.decomposition
            && self.hstar_bound
            && self.lower_bound
            && self.palindromic
            && self.nonnegative
            && self.boundary
            && self.degree_bounds
            && self.box_agreement != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct LocalHStarReport<T: Scalar> {
    pub dim: usize,
    pub lstar: IntPolynomial<T>,
    pub hstar: IntPolynomial<T>,
    pub is_thin: bool,
    /// `None` when `l* = 0`.
    pub subdegree: Option<usize>,
    pub degree: usize,
    pub codegree: usize,
    #[serde(with = "crate::io::int")]
    pub interior_point_count: T,
    pub checks: LocalChecks,
}

/// Computes `l*_P` together with its self-audit. Fails with
/// [`Error::InternalConsistency`] if any audited identity does not hold.
pub fn local_hstar<T: Scalar>(p: &LatticePolytope<T>) -> Result<LocalHStarReport<T>> {
    let fd = face_data(p);
    let fl = p.face_lattice();
    let top = fl.top();
    let ehr = fd.ehrhart[top].clone().expect("P is nonempty");
    let report = build_report(p, &fd, &ehr);
    if !report.checks.all_pass() {
        return Err(Error::InternalConsistency(format!(
            "local h* self-audit failed: {:?}",
            report.checks
        )));
    }
    Ok(report)
}

fn build_report<T: Scalar>(
    p: &LatticePolytope<T>,
    fd: &FaceData<T>,
    ehr: &EhrhartData<T>,
) -> LocalHStarReport<T> {
    let d = p.dim();
    let fl = p.face_lattice();
    let lstar = fd.lstar[fl.top()].clone();
    let h = ehr.hstar.clone();
    let interior = interior_point_count(p);

    let assembled: IntPolynomial<T> = (0..fl.len()).map(|f| &fd.lstar[f] * &fd.g_up[f]).sum();
    let g_p = fd.g_up[fl.bottom()].clone();
    let l = |i: usize| lstar.coeff(i);
    let checks = LocalChecks {
        decomposition: assembled == h,
        hstar_bound: (&lstar + &g_p).le_coefficientwise(&h),
        lower_bound: (2..=d).all(|i| l(1) <= l(i)),
        palindromic: lstar.is_palindromic(d + 1),
        nonnegative: lstar.is_nonnegative(),
        boundary: d == 0 || (l(0).is_zero() && l(d + 1).is_zero() && l(1) == interior),
        degree_bounds: lstar.is_zero()
            || (lstar.subdegree().is_some_and(|s| s >= ehr.codegree)
                && lstar.degree() <= ehr.degree),
        box_agreement: p
            .is_simplex()
            .then(|| box_polynomial(p).map(|b| b == lstar).unwrap_or(false)),
    };
    LocalHStarReport {
        dim: d,
        is_thin: lstar.is_zero(),
        subdegree: lstar.subdegree(),
        degree: lstar.degree(),
        codegree: ehr.codegree,
        interior_point_count: interior,
        hstar: h,
        lstar,
        checks,
    }
}

pub fn is_thin<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    Ok(local_hstar(p)?.is_thin)
}

/// `dim P ≥ 2 deg P`.
pub fn is_trivially_thin<T: Scalar>(p: &LatticePolytope<T>) -> bool {
    p.dim() >= 2 * hstar(p).degree
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct DecompositionCheck<T: Scalar> {
    pub holds: bool,
    /// `h*_P - Σ_F l*_F g_{[F,P)}`.
    pub residual: IntPolynomial<T>,
    pub hstar_bound: bool,
}

pub fn decomposition_check<T: Scalar>(p: &LatticePolytope<T>) -> DecompositionCheck<T> {
    let fd = face_data(p);
    let fl = p.face_lattice();
    let h = fd.hstar(fl.top());
    let assembled: IntPolynomial<T> = (0..fl.len()).map(|f| &fd.lstar[f] * &fd.g_up[f]).sum();
    let residual = &h - &assembled;
    let hstar_bound = (&fd.lstar[fl.top()] + &fd.g_up[fl.bottom()]).le_coefficientwise(&h);
    DecompositionCheck {
        holds: residual.is_zero(),
        residual,
        hstar_bound,
    }
}

/// `l*_1 ≤ l*_i` for `i = 2..=d`.
pub fn lower_bound_check<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    Ok(local_hstar(p)?.checks.lower_bound)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct JoinProductCheck<T: Scalar> {
    pub hstar_product: bool,
    pub lstar_product: bool,
    pub join_lstar: IntPolynomial<T>,
}

impl<T: Scalar> JoinProductCheck<T> {
    pub fn holds(&self) -> bool {
        self.hstar_product && self.lstar_product
    }
}

/// Compares `h*` and `l*` of the free join with the products of the factors.
pub fn multiplicativity_check<T: Scalar>(
    p: &LatticePolytope<T>,
    q: &LatticePolytope<T>,
) -> Result<JoinProductCheck<T>> {
    let j = free_join(p, q);
    let (lp, lq, lj) = (local_hstar(p)?, local_hstar(q)?, local_hstar(&j)?);
    Ok(JoinProductCheck {
        hstar_product: lj.hstar == &lp.hstar * &lq.hstar,
        lstar_product: lj.lstar == &lp.lstar * &lq.lstar,
        join_lstar: lj.lstar,
    })
}

/// Coarsening the lattice to the columns of `b` can only shrink `h*` and
/// `l*` coefficientwise.
pub fn refinement_monotonicity_check<T: Scalar>(
    p: &LatticePolytope<T>,
    b: &IntMatrix<T>,
) -> Result<bool> {
    let coarse = p.sublattice_view(b)?;
    let (fine, coarse) = (local_hstar(p)?, local_hstar(&coarse)?);
    Ok(
        coarse.lstar.le_coefficientwise(&fine.lstar)
            && coarse.hstar.le_coefficientwise(&fine.hstar),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::polytope::lattice_pyramid;

    type P = LatticePolytope<i64>;
    type Poly = IntPolynomial<i64>;

    fn lstar(p: &P) -> Vec<i64> {
        local_hstar(p).unwrap().lstar.to_i64_vec().unwrap()
    }

    #[test]
    fn low_dimensional_closed_forms() {
        assert!(lstar(&P::from_i64(&[&[2, 3]]).unwrap()).is_empty());
        assert_eq!(lstar(&catalog::segment(0, 5)), vec![0, 4]);
        assert_eq!(lstar(&catalog::reflexive_triangle()), vec![0, 1, 1]);
        let c2: P = catalog::centered_cube(2);
        assert_eq!(lstar(&c2), vec![0, 1, 1]);
    }

    #[test]
    fn cubes() {
        assert_eq!(lstar(&catalog::cube(3)), vec![0, 0, 1]);
        assert_eq!(lstar(&catalog::centered_cube(3)), vec![0, 1, 17, 1]);
    }

    #[test]
    fn pyramids_are_thin() {
        for base in [
            catalog::cube::<i64>(2),
            catalog::reflexive_triangle(),
            catalog::centered_cube(2),
        ] {
            assert!(is_thin(&lattice_pyramid(&base)).unwrap());
        }
        assert!(!is_thin(&catalog::cube::<i64>(3)).unwrap());
        assert!(is_thin(&catalog::nonspanning_thin_simplex::<i64>()).unwrap());
    }

    #[test]
    fn trivially_thin() {
        assert!(is_trivially_thin(&catalog::cube::<i64>(2)));
        assert!(!is_trivially_thin(
            &catalog::nonspanning_thin_simplex::<i64>()
        ));
        assert!(is_trivially_thin(&catalog::standard_simplex::<i64>(3)));
    }

    #[test]
    fn decomposition_on_cube() {
        let c = decomposition_check(&catalog::cube::<i64>(3));
        assert!(c.holds && c.hstar_bound);
    }

    #[test]
    fn join_products() {
        let seg = catalog::segment::<i64>(-1, 1);
        let j = multiplicativity_check(&seg, &seg).unwrap();
        assert!(j.holds());
        assert_eq!(j.join_lstar, Poly::from_i64(&[0, 0, 1]));
        let point = P::from_i64(&[&[0]]).unwrap();
        assert!(
            multiplicativity_check(&point, &catalog::reflexive_triangle())
                .unwrap()
                .join_lstar
                .is_zero()
        );
    }

    #[test]
    fn refinement() {
        let seg = catalog::segment::<i64>(0, 2);
        assert!(refinement_monotonicity_check(&seg, &IntMatrix::from_i64(&[&[2]])).unwrap());
        let ex: P = catalog::nonspanning_thin_simplex();
        let (_, b) = ex.spanning_sublattice();
        assert!(refinement_monotonicity_check(&ex, &b).unwrap());
    }
}
