use std::collections::HashSet;

use super::LatticePolytope;
use crate::linalg::IntMatrix;
use crate::scalar::{add_vec, sub_vec, Scalar};

/// An affine unimodular map `x ↦ A x + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap<T> {
    pub linear: IntMatrix<T>,
    pub translation: Vec<T>,
}

impl<T: Scalar> AffineMap<T> {
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        add_vec(&self.linear.mul_vec(x), &self.translation)
    }
}

impl<T: Scalar> LatticePolytope<T> {
    /// Cheap combinatorial fingerprint shared by isomorphic polytopes.
    fn fingerprint(&self) -> (usize, usize, Vec<usize>, Vec<usize>) {
        let mut facet_sizes: Vec<usize> = self.facets().iter().map(|f| f.vertices.len()).collect();
        facet_sizes.sort_unstable();
        (
            self.dim(),
            self.num_vertices(),
            self.face_lattice().f_vector(),
            facet_sizes,
        )
    }

    /// Whether some affine unimodular map takes the vertices of `self` onto
    /// those of `other`.
    pub fn is_unimodularly_equivalent(&self, other: &Self) -> bool {
        self.unimodular_map(other).is_some()
    }

    /// An affine unimodular map taking `self` onto `other`, found by fixing
    /// an anchor vertex with `d` independent edge directions and trying every
    /// image of that frame.
    pub fn unimodular_map(&self, other: &Self) -> Option<AffineMap<T>> {
        if self.fingerprint() != other.fingerprint() {
            return None;
        }
        let d = self.dim();
        if d == 0 {
            return Some(AffineMap {
                linear: IntMatrix::identity(0),
                translation: Vec::new(),
            });
        }
        let (anchor, frame) = self.anchor_frame()?;
        let p0 = self.vertex(anchor).to_vec();
        let src_cols: Vec<Vec<T>> = frame
            .iter()
            .map(|&i| sub_vec(self.vertex(i), &p0))
            .collect();
        let src = IntMatrix::from_columns(&src_cols, d).ok()?;
        let det = src.determinant().ok()?;
        let adj = src.adjugate().ok()?;
        let targets: HashSet<&Vec<T>> = other.vertices().iter().collect();
        let anchor_degree = self.neighbours(anchor).len();

        for q0 in 0..other.num_vertices() {
            let nbrs = other.neighbours(q0);
            if nbrs.len() != anchor_degree {
                continue;
            }
            let base = other.vertex(q0).to_vec();
            let mut found = None;
            for_each_arrangement(&nbrs, d, &mut |pick| {
                if found.is_some() {
                    return;
                }
                let cols: Vec<Vec<T>> = pick
                    .iter()
                    .map(|&j| sub_vec(other.vertex(j), &base))
                    .collect();
                let dst = IntMatrix::from_columns(&cols, d).expect("square");
                let prod = &dst * &adj;
                let mut a = IntMatrix::zeros(d, d);
                for r in 0..d {
                    for c in 0..d {
                        let (q, rem) = num_integer::Integer::div_rem(&prod[(r, c)], &det);
                        if !rem.is_zero() {
                            return;
                        }
                        a[(r, c)] = q;
                    }
                }
                if !a.determinant().map(|x| x.abs().is_one()).unwrap_or(false) {
                    return;
                }
                let b = sub_vec(&base, &a.mul_vec(&p0));
                let map = AffineMap {
                    linear: a,
                    translation: b,
                };
                if self
                    .vertices()
                    .iter()
                    .all(|v| targets.contains(&map.apply(v)))
                {
                    found = Some(map);
                }
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    /// Vertices joined to `i` by an edge.
    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let fl = self.face_lattice();
        let mut out: Vec<usize> = fl
            .faces_of_dim(1)
            .map(|e| fl.face(e).vertices)
            .filter(|e| e.contains(i))
            .flat_map(|e| e.iter())
            .filter(|&j| j != i)
            .collect();
        out.sort_unstable();
        out
    }

    /// A vertex of minimal degree together with `d` neighbours spanning
    /// independent edge directions.
    fn anchor_frame(&self) -> Option<(usize, Vec<usize>)> {
        let d = self.dim();
        let anchor = (0..self.num_vertices()).min_by_key(|&i| self.neighbours(i).len())?;
        let p0 = self.vertex(anchor).to_vec();
        let mut frame = Vec::new();
        let mut rows = Vec::new();
        for j in self.neighbours(anchor) {
            let mut trial = rows.clone();
            trial.push(sub_vec(self.vertex(j), &p0));
            if IntMatrix::from_rows(trial.clone(), d).ok()?.rank() == trial.len() {
                rows = trial;
                frame.push(j);
                if frame.len() == d {
                    return Some((anchor, frame));
                }
            }
        }
        None
    }
}

/// Calls `f` on every ordered selection of `k` distinct items.
fn for_each_arrangement(items: &[usize], k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        items: &[usize],
        k: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                rec(items, k, used, cur, f);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(items, k, &mut vec![false; items.len()], &mut Vec::new(), f);
}
