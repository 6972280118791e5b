use num_traits::Signed;
use serde::Serialize;

use super::{LatticePolytope, VertexSet};
use crate::error::{Error, Result};
use crate::linalg::{solve_integer, IntMatrix};
use crate::scalar::{dot, sub_vec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct WidthResult<T: Scalar> {
    #[serde(with = "crate::io::int")]
    pub width: T,
    #[serde(with = "crate::io::ints")]
    pub direction: Vec<T>,
    /// Coordinate bound of the direction search.
    pub bound: usize,
    /// True when the width is known to be minimal over all directions, not
    /// only over those within the bound (width 0 or 1).
    pub certified: bool,
}

/// A lattice projection onto `[0,1]`: `functional` takes the value `level`
/// on `lower` and `level + 1` on `upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyWitness<T> {
    pub functional: Vec<T>,
    pub level: T,
    pub lower: VertexSet,
    pub upper: VertexSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PyramidWitness {
    pub apex: usize,
    /// Index into [`LatticePolytope::facets`]; `None` for a point.
    pub base_facet: Option<usize>,
}

impl<T: Scalar> LatticePolytope<T> {
    /// Minimal lattice width over primitive directions with coordinates in
    /// `[-bound, bound]`. Ties prefer small L1 norm, then the
    /// lexicographically largest direction, so `e1` wins on cubes.
    pub fn lattice_width(&self, bound: usize) -> WidthResult<T> {
        let d = self.dim();
        if d == 0 {
            return WidthResult {
                width: T::zero(),
                direction: Vec::new(),
                bound,
                certified: true,
            };
        }
        let b = bound.max(1) as i64;
        let mut best: Option<(T, i64, Vec<T>)> = None;
        let mut u = vec![-b; d];
        loop {
            let first_nonzero = u.iter().find(|&&x| x != 0).copied();
            if first_nonzero.is_some_and(|x| x > 0)
                && u.iter().fold(0i64, |g, &x| num_integer::gcd(g, x)) == 1
            {
                let dir: Vec<T> = u.iter().map(|&x| T::from_int(x)).collect();
                let w = self.width_along(&dir);
                let l1: i64 = u.iter().map(|x| x.abs()).sum();
                let better = match &best {
                    None => true,
                    Some((bw, bl, bd)) => {
                        (&w, l1) < (bw, *bl) || ((&w, l1) == (bw, *bl) && dir > *bd)
                    }
                };
                if better {
                    best = Some((w, l1, dir));
                }
            }
            let mut k = d;
            loop {
                if k == 0 {
                    let (width, _, direction) = best.expect("some direction");
                    if width > T::one() {
                        if let Some(c) = self.cayley_structure() {
                            return WidthResult {
                                width: T::one(),
                                direction: c.functional,
                                bound,
                                certified: true,
                            };
                        }
                    }
                    let certified = width <= T::one();
                    return WidthResult {
                        width,
                        direction,
                        bound,
                        certified,
                    };
                }
                k -= 1;
                if u[k] < b {
                    u[k] += 1;
                    break;
                }
                u[k] = -b;
            }
        }
    }

    /// `max <u,P> - min <u,P>`.
    pub fn width_along(&self, u: &[T]) -> T {
        let vals: Vec<T> = self.vertices().iter().map(|v| dot(u, v)).collect();
        let max = vals.iter().max().cloned().unwrap_or_else(T::zero);
        let min = vals.iter().min().cloned().unwrap_or_else(T::zero);
        max - min
    }

    /// An integer functional that is `c` on `lower` and `c + 1` on `upper`.
    pub fn cayley_functional(&self, lower: VertexSet, upper: VertexSet) -> Option<(Vec<T>, T)> {
        let d = self.dim();
        let base_idx = lower.iter().next()?;
        upper.iter().next()?;
        let base = self.vertex(base_idx).to_vec();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for i in lower.iter().filter(|&i| i != base_idx) {
            rows.push(sub_vec(self.vertex(i), &base));
            rhs.push(T::zero());
        }
        for i in upper.iter() {
            rows.push(sub_vec(self.vertex(i), &base));
            rhs.push(T::one());
        }
        let m = IntMatrix::from_rows(rows, d).ok()?;
        let u = solve_integer(&m, &rhs)?;
        let c = dot(&u, &base);
        Some((u, c))
    }

    /// A lattice projection of `P` onto a unit segment, found exactly by
    /// scanning pairs of disjoint faces covering all vertices.
    pub fn cayley_structure(&self) -> Option<CayleyWitness<T>> {
        if self.dim() == 0 {
            return None;
        }
        let fl = self.face_lattice();
        let all = self.all_vertices();
        for f in fl
            .faces()
            .iter()
            .filter(|f| f.dim >= 0 && f.vertices != all)
        {
            let rest = all.difference(f.vertices);
            if !self.is_face(rest) {
                continue;
            }
            let Some((u, c)) = self.cayley_functional(f.vertices, rest) else {
                continue;
            };
            return Some(CayleyWitness {
                functional: u,
                level: c,
                lower: f.vertices,
                upper: rest,
            });
        }
        None
    }

    pub fn is_cayley(&self) -> bool {
        self.cayley_structure().is_some()
    }

    /// A vertex at lattice distance one from a facet containing all other
    /// vertices. A point counts as a pyramid.
    pub fn pyramid_structure(&self) -> Option<PyramidWitness> {
        if self.dim() == 0 {
            return Some(PyramidWitness {
                apex: 0,
                base_facet: None,
            });
        }
        let all = self.all_vertices();
        for (fi, f) in self.facets().iter().enumerate() {
            let off = all.difference(f.vertices);
            if off.len() == 1 {
                let apex = off.iter().next().expect("one vertex");
                if f.slack(self.vertex(apex)).is_one() {
                    return Some(PyramidWitness {
                        apex,
                        base_facet: Some(fi),
                    });
                }
            }
        }
        None
    }

    pub fn is_lattice_pyramid(&self) -> bool {
        self.pyramid_structure().is_some()
    }

    /// Whether `P = conv(F, G)` with `dim P = dim F + dim G + 1`.
    pub fn is_join(&self, f: VertexSet, g: VertexSet) -> bool {
        !f.is_empty()
            && !g.is_empty()
            && self.is_face(f)
            && self.is_face(g)
            && f.union(g) == self.all_vertices()
            && self.face_dim(f) + self.face_dim(g) + 1 == self.dim() as isize
    }

    /// All join decompositions `(F, G)` with `F` preceding `G` in face order.
    pub fn joins(&self) -> Vec<(VertexSet, VertexSet)> {
        let fl = self.face_lattice();
        let all = self.all_vertices();
        let mut out = Vec::new();
        for f in fl
            .faces()
            .iter()
            .filter(|f| f.dim >= 0 && f.vertices != all)
        {
            let g = all.difference(f.vertices);
            if f.vertices < g && self.is_join(f.vertices, g) {
                out.push((f.vertices, g));
            }
        }
        out
    }

    pub fn find_join(&self) -> Option<(VertexSet, VertexSet)> {
        self.joins().into_iter().next()
    }

    /// Whether `(F, G)` is a join and `P` is isomorphic to the free join of
    /// the two faces.
    pub fn is_free_join(&self, f: VertexSet, g: VertexSet) -> Result<bool> {
        if !self.is_join(f, g) {
            return Err(Error::NotAJoin);
        }
        let pf = self.face_polytope(f)?;
        let pg = self.face_polytope(g)?;
        Ok(self.is_unimodularly_equivalent(&free_join(&pf, &pg)))
    }

    /// First join decomposition that is free, if any.
    pub fn find_free_join(&self) -> Option<(VertexSet, VertexSet)> {
        self.joins()
            .into_iter()
            .find(|&(f, g)| self.is_free_join(f, g).unwrap_or(false))
    }

    /// Join of two faces that is also a Cayley polytope with the faces as
    /// its two fibers.
    pub fn is_cayley_join(&self, f: VertexSet, g: VertexSet) -> bool {
        self.is_join(f, g) && self.cayley_functional(f, g).is_some()
    }

    pub fn cayley_joins(&self) -> Vec<(VertexSet, VertexSet)> {
        self.joins()
            .into_iter()
            .filter(|&(f, g)| self.cayley_functional(f, g).is_some())
            .collect()
    }
}

/// `conv(P × 0 × 0, 0 × Q × 1)`, in the working coordinates of `P` and `Q`.
pub fn free_join<T: Scalar>(p: &LatticePolytope<T>, q: &LatticePolytope<T>) -> LatticePolytope<T> {
    let (n, m) = (p.dim(), q.dim());
    let mut pts = Vec::with_capacity(p.num_vertices() + q.num_vertices());
    for v in p.vertices() {
        let mut x = v.clone();
        x.resize(n + m + 1, T::zero());
        pts.push(x);
    }
    for w in q.vertices() {
        let mut x = vec![T::zero(); n];
        x.extend(w.iter().cloned());
        x.push(T::one());
        pts.push(x);
    }
    LatticePolytope::new(pts).expect("free join of nonempty polytopes")
}

/// Lattice pyramid `conv(P × 0, e_{d+1})`.
pub fn lattice_pyramid<T: Scalar>(p: &LatticePolytope<T>) -> LatticePolytope<T> {
    let point = LatticePolytope::new(vec![Vec::new()]).expect("point");
    free_join(&point, p)
}
