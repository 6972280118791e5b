//! Toric f-, g- and h-polynomials of lower Eulerian posets.
//!
//! Conventions follow Stanley: for a poset of rank `d` (length of its
//! longest chain) with minimum `0̂`,
//! `f(t) = Σ_x (t-1)^{d-ρ(x)} g_{[0̂,x)}(t)`, `g` keeps the differences
//! `f_i - f_{i-1}` for `i ≤ d/2`, and `h(t) = t^d f(1/t)`. The empty poset
//! has `f = g = h = 1`.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polynomial::IntPolynomial;
use crate::polytope::{FaceLattice, LatticePolytope};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct GHRecord<T: Scalar> {
    /// Rank of the poset, `-1` when empty.
    pub rank: isize,
    pub f: IntPolynomial<T>,
    pub g: IntPolynomial<T>,
    pub h: IntPolynomial<T>,
}

impl<T: Scalar> GHRecord<T> {
    fn empty() -> Self {
        Self {
            rank: -1,
            f: IntPolynomial::one(),
            g: IntPolynomial::one(),
            h: IntPolynomial::one(),
        }
    }

    /// Completes `f` of a rank-`d` poset to the full record.
    pub fn from_f(rank: isize, f: IntPolynomial<T>) -> Self {
        if rank < 0 {
            return Self::empty();
        }
        let d = rank as usize;
        let g = IntPolynomial::new(
            (0..=d / 2)
                .map(|i| {
                    if i == 0 {
                        f.coeff(0)
                    } else {
                        f.coeff(i) - f.coeff(i - 1)
                    }
                })
                .collect(),
        );
        let h = f.reverse(d);
        Self { rank, f, g, h }
    }
}

/// `Σ (t-1)^{d-ρ} g` over `(ρ, g)` pairs.
fn assemble_f<T: Scalar>(
    d: usize,
    terms: impl Iterator<Item = (usize, IntPolynomial<T>)>,
) -> IntPolynomial<T> {
    terms
        .map(|(r, g)| &IntPolynomial::t_minus_one_pow(d - r) * &g)
        .sum()
}

/// A finite ranked poset given by its order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPoset {
    rank: Vec<usize>,
    /// `below[y]` lists the `x` with `x < y`.
    below: Vec<Vec<usize>>,
}

impl RankedPoset {
    /// Builds a poset from ranks and the strict order `less(x, y)`. Rejects
    /// inputs without a unique rank-0 minimum or whose covers skip ranks.
    pub fn new(rank: Vec<usize>, less: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = rank.len();
        let below: Vec<Vec<usize>> = (0..n)
            .map(|y| (0..n).filter(|&x| x != y && less(x, y)).collect())
            .collect();
        if n > 0 {
            let minima: Vec<usize> = (0..n).filter(|&x| below[x].is_empty()).collect();
            if minima.len() != 1 || rank[minima[0]] != 0 {
                return Err(Error::NotGraded(
                    "poset needs a unique minimum of rank 0".into(),
                ));
            }
            for y in 0..n {
                for &x in &below[y] {
                    if rank[x] >= rank[y] {
                        return Err(Error::NotGraded(format!(
                            "element {x} below {y} has rank {} >= {}",
                            rank[x], rank[y]
                        )));
                    }
                    let is_cover = !below[y].iter().any(|&z| below[z].contains(&x));
                    if is_cover && rank[y] != rank[x] + 1 {
                        return Err(Error::NotGraded(format!("cover {x} < {y} skips a rank")));
                    }
                }
            }
        }
        Ok(Self { rank, below })
    }

    /// The half-open interval `[bottom, top)` of a face lattice, re-ranked
    /// from `bottom`.
    pub fn face_interval(fl: &FaceLattice, bottom: usize, top: usize) -> Self {
        let elems: Vec<usize> = fl
            .interval(bottom, top)
            .into_iter()
            .filter(|&k| k != top)
            .collect();
        let rank = elems
            .iter()
            .map(|&k| fl.rank(k) - fl.rank(bottom))
            .collect();
        Self::new(rank, |x, y| fl.leq(elems[x], elems[y])).expect("face intervals are graded")
    }

    /// The dual of the half-open interval `(bottom, top]`: order reversed,
    /// ranked from `top`.
    pub fn dual_face_interval(fl: &FaceLattice, bottom: usize, top: usize) -> Self {
        let elems: Vec<usize> = fl
            .interval(bottom, top)
            .into_iter()
            .filter(|&k| k != bottom)
            .collect();
        let rank = elems.iter().map(|&k| fl.rank(top) - fl.rank(k)).collect();
        Self::new(rank, |x, y| fl.leq(elems[y], elems[x])).expect("face intervals are graded")
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self) -> isize {
        self.rank.iter().max().map_or(-1, |&r| r as isize)
    }

    /// Every interval `[x, y]`, `x < y`, balances even and odd ranks.
    pub fn is_lower_eulerian(&self) -> bool {
        (0..self.len()).all(|y| {
            self.below[y].iter().all(|&x| {
                let mid = self.below[y]
                    .iter()
                    .filter(|&&z| z == x || self.below[z].contains(&x));
                let (mut even, mut odd) = (0usize, 0usize);
                for z in mid.chain(std::iter::once(&y)) {
                    if self.rank[*z].is_multiple_of(2) {
                        even += 1;
                    } else {
                        odd += 1;
                    }
                }
                even == odd
            })
        })
    }

    /// f, g and h of the whole poset.
    pub fn fgh<T: Scalar>(&self) -> GHRecord<T> {
        if self.is_empty() {
            return GHRecord::empty();
        }
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.rank[x]);
        // g of [0̂, x) for each x
        let mut g_below: Vec<IntPolynomial<T>> = vec![IntPolynomial::one(); self.len()];
        for &y in &order {
            if self.rank[y] == 0 {
                continue;
            }
            let d = self.rank[y] - 1;
            let f = assemble_f(
                d,
                self.below[y]
                    .iter()
                    .map(|&x| (self.rank[x], g_below[x].clone())),
            );
            g_below[y] = GHRecord::from_f(d as isize, f).g;
        }
        let d = self.rank() as usize;
        let f = assemble_f(
            d,
            (0..self.len()).map(|x| (self.rank[x], g_below[x].clone())),
        );
        GHRecord::from_f(d as isize, f)
    }
}

/// Interval key: bottom face, top face, and whether the interval is the
/// dual `(bottom, top]*` rather than `[bottom, top)`.
type IntervalKey = (usize, usize, bool);

/// Memoized toric polynomials of the intervals of one face lattice.
pub struct IntervalPolys<'a, T: Scalar> {
    lattice: &'a FaceLattice,
    memo: HashMap<IntervalKey, GHRecord<T>>,
}

impl<'a, T: Scalar> IntervalPolys<'a, T> {
    pub fn new(lattice: &'a FaceLattice) -> Self {
        Self {
            lattice,
            memo: HashMap::new(),
        }
    }

    pub fn lattice(&self) -> &'a FaceLattice {
        self.lattice
    }

    /// `[bottom, top)` when `dual` is false, `(bottom, top]*` otherwise.
    pub fn record(&mut self, bottom: usize, top: usize, dual: bool) -> GHRecord<T> {
        if let Some(r) = self.memo.get(&(bottom, top, dual)) {
            return r.clone();
        }
        let fl = self.lattice;
        let rec = if bottom == top {
            GHRecord::empty()
        } else {
            let d = fl.rank(top) - fl.rank(bottom) - 1;
            let members: Vec<usize> = fl
                .interval(bottom, top)
                .into_iter()
                .filter(|&k| if dual { k != bottom } else { k != top })
                .collect();
            let terms: Vec<(usize, IntPolynomial<T>)> = members
                .into_iter()
                .map(|x| {
                    if dual {
                        (fl.rank(top) - fl.rank(x), self.record(x, top, true).g)
                    } else {
                        (
                            fl.rank(x) - fl.rank(bottom),
                            self.record(bottom, x, false).g,
                        )
                    }
                })
                .collect();
            GHRecord::from_f(d as isize, assemble_f(d, terms.into_iter()))
        };
        self.memo.insert((bottom, top, dual), rec.clone());
        rec
    }

    pub fn g(&mut self, bottom: usize, top: usize, dual: bool) -> IntPolynomial<T> {
        self.record(bottom, top, dual).g
    }
}

/// f, g, h of the proper-face poset `[∅, P)`.
pub fn toric_polys<T: Scalar>(p: &LatticePolytope<T>) -> GHRecord<T> {
    let fl = p.face_lattice();
    IntervalPolys::new(fl).record(fl.bottom(), fl.top(), false)
}

/// `g_P`, the g-polynomial of `[∅, P)`.
pub fn g_polynomial<T: Scalar>(p: &LatticePolytope<T>) -> IntPolynomial<T> {
    toric_polys(p).g
}

/// `g` of the dual of `(F, P]`, for the face with lattice index `face`.
pub fn g_dual_interval<T: Scalar>(p: &LatticePolytope<T>, face: usize) -> IntPolynomial<T> {
    let fl = p.face_lattice();
    IntervalPolys::new(fl).g(face, fl.top(), true)
}

/// `g` of `[F, P)`.
pub fn g_interval_up<T: Scalar>(p: &LatticePolytope<T>, face: usize) -> IntPolynomial<T> {
    let fl = p.face_lattice();
    IntervalPolys::new(fl).g(face, fl.top(), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    type Poly = IntPolynomial<i64>;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn empty_poset() {
        let e = RankedPoset::new(vec![], |_, _| false).unwrap();
        let r = e.fgh::<i64>();
        assert_eq!((r.f, r.g, r.h), (Poly::one(), Poly::one(), Poly::one()));
    }

    #[test]
    fn half_open_boolean_lattices_have_trivial_g() {
        for n in 1..=5usize {
            let elems: Vec<u32> = (0..(1u32 << n) - 1).collect();
            let poset = RankedPoset::new(
                elems.iter().map(|e| e.count_ones() as usize).collect(),
                |x, y| elems[x] & elems[y] == elems[x] && x != y,
            )
            .unwrap();
            assert!(poset.is_lower_eulerian());
            assert_eq!(poset.fgh::<i64>().g, Poly::one());
        }
    }

    #[test]
    fn square_and_cube() {
        assert_eq!(g_polynomial(&catalog::cube::<i64>(2)), p(&[1, 1]));
        let t = toric_polys(&catalog::cube::<i64>(3));
        assert_eq!(t.h, p(&[1, 5, 5, 1]));
        assert_eq!(t.g, p(&[1, 4]));
    }

    #[test]
    fn non_graded_input_is_rejected() {
        // 0 < 1 < 2 and 0 < 2 with ranks skipping 1 on the cover 0 < 2
        assert!(RankedPoset::new(vec![0, 1, 2, 2], |x, y| matches!(
            (x, y),
            (0, 1) | (0, 2) | (1, 2) | (0, 3)
        ))
        .is_err());
        assert!(RankedPoset::new(vec![0, 0], |_, _| false).is_err());
    }

    #[test]
    fn dual_intervals() {
        let c = catalog::cube::<i64>(3);
        let fl = c.face_lattice();
        for f in fl.faces_of_dim(2) {
            assert_eq!(g_dual_interval(&c, f), Poly::one());
            assert_eq!(g_interval_up(&c, f), Poly::one());
        }
        for v in fl.faces_of_dim(0) {
            assert_eq!(g_dual_interval(&c, v), Poly::one());
        }
        assert_eq!(g_interval_up(&c, fl.bottom()), p(&[1, 4]));
        assert_eq!(g_interval_up(&c, fl.top()), Poly::one());
        let s = catalog::standard_simplex::<i64>(4);
        assert_eq!(g_dual_interval(&s, s.face_lattice().bottom()), Poly::one());
    }

    #[test]
    fn memoized_matches_explicit_posets() {
        for poly in [
            catalog::cube::<i64>(3),
            catalog::cross_polytope(3),
            catalog::lawrence_prism([1, 2, 3]),
        ] {
            let fl = poly.face_lattice();
            let mut memo = IntervalPolys::<i64>::new(fl);
            for a in 0..fl.len() {
                for b in a..fl.len() {
                    if fl.leq(a, b) {
                        assert_eq!(
                            memo.record(a, b, false),
                            RankedPoset::face_interval(fl, a, b).fgh()
                        );
                        assert_eq!(
                            memo.record(a, b, true),
                            RankedPoset::dual_face_interval(fl, a, b).fgh()
                        );
                    }
                }
            }
        }
    }
}
