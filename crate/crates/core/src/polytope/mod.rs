//! Vertex-defined lattice polytopes.
//!
//! A [`LatticePolytope`] is always stored full-dimensional. Input whose affine
//! hull is a proper subspace is rewritten in coordinates of a basis of the
//! lattice `aff(P) ∩ Z^n`, so every count made downstream is taken with
//! respect to the lattice induced on the affine hull.

mod equivalence;
mod faces;
mod lattice;
mod structure;
mod vertex_set;

use std::collections::HashSet;
use std::sync::OnceLock;

pub use equivalence::AffineMap;
pub use faces::{Face, FaceLattice};
pub use lattice::QuotientGroup;
pub use structure::{free_join, lattice_pyramid, CayleyWitness, PyramidWitness, WidthResult};
pub(crate) use vertex_set::for_each_combination;
pub use vertex_set::{VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};
use crate::linalg::{cofactor_normal, primitive, saturated_row_basis, IntMatrix};
use crate::scalar::{dot, sub_vec, Scalar};

/// Facet inequality `normal · x >= offset` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Facet<T> {
    pub normal: Vec<T>,
    pub offset: T,
    /// Vertices on the facet.
    pub vertices: VertexSet,
}

impl<T: Scalar> Facet<T> {
    /// `normal · x - offset`, the lattice distance of `x` from the facet
    /// hyperplane (nonnegative inside the polytope).
    pub fn slack(&self, x: &[T]) -> T {
        dot(&self.normal, x) - self.offset.clone()
    }
}

/// Affine map from working coordinates back to the input coordinates:
/// `x = origin + Σ y_i basis_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding<T> {
    pub origin: Vec<T>,
    pub basis: Vec<Vec<T>>,
}

impl<T: Scalar> Embedding<T> {
    fn identity(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { T::one() } else { T::zero() })
                    .collect()
            })
            .collect();
        Self {
            origin: vec![T::zero(); n],
            basis,
        }
    }

    pub fn apply(&self, y: &[T]) -> Vec<T> {
        let mut x = self.origin.clone();
        for (yi, b) in y.iter().zip(&self.basis) {
            for (xj, bj) in x.iter_mut().zip(b) {
                *xj = xj.clone() + yi.clone() * bj.clone();
            }
        }
        x
    }
}

#[derive(Clone, Debug)]
pub struct LatticePolytope<T: Scalar> {
    vertices: Vec<Vec<T>>,
    facets: Vec<Facet<T>>,
    embedding: Embedding<T>,
    face_lattice: OnceLock<FaceLattice>,
}

impl<T: Scalar> LatticePolytope<T> {
    /// Convex hull of the given lattice points. Duplicates and non-vertices
    /// are dropped; the remaining vertices keep their input order.
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let n = first.len();
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: p.len(),
            });
        }
        let mut seen = HashSet::new();
        let points: Vec<Vec<T>> = points
            .into_iter()
            .filter(|p| seen.insert(p.clone()))
            .collect();
        let origin = points[0].clone();

        if points.len() == 1 {
            return Ok(Self {
                vertices: vec![Vec::new()],
                facets: Vec::new(),
                embedding: Embedding {
                    origin,
                    basis: Vec::new(),
                },
                face_lattice: OnceLock::new(),
            });
        }

        let diffs: Vec<Vec<T>> = points.iter().skip(1).map(|p| sub_vec(p, &origin)).collect();
        let diff_matrix = IntMatrix::from_rows(diffs, n)?;
        let rank = diff_matrix.rank();
        let (working, embedding) = if rank == n {
            (points, Embedding::identity(n))
        } else {
            let (basis, v) = saturated_row_basis(&diff_matrix);
            let working = points
                .iter()
                .map(|p| {
                    let y = IntMatrix::from_rows(vec![sub_vec(p, &origin)], n).expect("row");
                    let y = &y * &v;
                    (0..rank).map(|j| y[(0, j)].clone()).collect()
                })
                .collect();
            (working, Embedding { origin, basis })
        };

        let candidate_facets = facet_hyperplanes(&working, rank);
        let keep: Vec<usize> = (0..working.len())
            .filter(|&i| {
                let tight: Vec<Vec<T>> = candidate_facets
                    .iter()
                    .filter(|(a, b)| dot(a, &working[i]) == *b)
                    .map(|(a, _)| a.clone())
                    .collect();
                IntMatrix::from_rows(tight, rank)
                    .map(|m| m.rank() == rank)
                    .unwrap_or(false)
            })
            .collect();
        if keep.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(MAX_VERTICES));
        }
        let vertices: Vec<Vec<T>> = keep.iter().map(|&i| working[i].clone()).collect();
        let mut facets: Vec<Facet<T>> = candidate_facets
            .into_iter()
            .map(|(normal, offset)| {
                let on = VertexSet::from_indices(
                    (0..vertices.len()).filter(|&i| dot(&normal, &vertices[i]) == offset),
                );
                Facet {
                    normal,
                    offset,
                    vertices: on,
                }
            })
            .collect();
        facets.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));

        Ok(Self {
            vertices,
            facets,
            embedding,
            face_lattice: OnceLock::new(),
        })
    }

    /// Convenience constructor from `i64` literals.
    pub fn from_i64(points: &[&[i64]]) -> Result<Self> {
        Self::new(
            points
                .iter()
                .map(|p| p.iter().map(|&x| T::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.vertices[0].len()
    }

    /// Length of the input coordinate vectors.
    pub fn ambient_dim(&self) -> usize {
        self.embedding.origin.len()
    }

    pub fn vertices(&self) -> &[Vec<T>] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &[T] {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertices.len())
    }

    pub fn facets(&self) -> &[Facet<T>] {
        &self.facets
    }

    pub fn embedding(&self) -> &Embedding<T> {
        &self.embedding
    }

    /// Vertices mapped back into the input coordinates.
    pub fn ambient_vertices(&self) -> Vec<Vec<T>> {
        self.vertices
            .iter()
            .map(|v| self.embedding.apply(v))
            .collect()
    }

    pub fn is_full_dimensional_input(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim() + 1
    }

    pub fn require_simplex(&self) -> Result<()> {
        if self.is_simplex() {
            Ok(())
        } else {
            Err(Error::NotSimplex {
                vertices: self.vertices.len(),
                dim: self.dim(),
            })
        }
    }

    /// Whether `x` lies in `nP` (in its interior when `interior` is set).
    pub fn contains_dilate(&self, x: &[T], n: &T, interior: bool) -> bool {
        if self.dim() == 0 {
            return true;
        }
        self.facets.iter().all(|f| {
            let s = dot(&f.normal, x) - n.clone() * f.offset.clone();
            if interior {
                s.is_positive()
            } else {
                !s.is_negative()
            }
        })
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.face_lattice.get_or_init(|| FaceLattice::build(self))
    }

    /// The face spanned by the given vertices, as a polytope in its own
    /// affine lattice.
    pub fn face_polytope(&self, face: VertexSet) -> Result<Self> {
        if face.is_empty() {
            return Err(Error::EmptyInput);
        }
        let pts = face.iter().map(|i| self.vertices[i].clone()).collect();
        Self::new(pts)
    }

    /// Smallest face containing the given vertices.
    pub fn face_closure(&self, set: VertexSet) -> VertexSet {
        if set.is_empty() {
            return set;
        }
        self.facets
            .iter()
            .filter(|f| set.is_subset(f.vertices))
            .fold(self.all_vertices(), |acc, f| acc.intersection(f.vertices))
    }

    /// `set` is the vertex set of a face.
    pub fn is_face(&self, set: VertexSet) -> bool {
        set.is_empty() || self.face_closure(set) == set
    }

    /// Dimension of the face with the given vertex set (−1 for the empty face).
    pub fn face_dim(&self, set: VertexSet) -> isize {
        if set.is_empty() {
            return -1;
        }
        let normals: Vec<Vec<T>> = self
            .facets
            .iter()
            .filter(|f| set.is_subset(f.vertices))
            .map(|f| f.normal.clone())
            .collect();
        let r = IntMatrix::from_rows(normals, self.dim())
            .map(|m| m.rank())
            .unwrap_or(0);
        (self.dim() - r) as isize
    }

    /// Converts the coordinates to another scalar type.
    pub fn convert<U: Scalar>(&self) -> Option<LatticePolytope<U>> {
        let conv = |v: &Vec<T>| {
            v.iter()
                .map(|x| U::from_str(&x.to_string()).ok())
                .collect::<Option<Vec<U>>>()
        };
        let pts = self
            .ambient_vertices()
            .iter()
            .map(conv)
            .collect::<Option<Vec<_>>>()?;
        LatticePolytope::new(pts).ok()
    }
}

/// All facet hyperplanes of the full-dimensional hull of `points`, as
/// `(primitive normal, offset)` with `normal · p >= offset` for every point.
fn facet_hyperplanes<T: Scalar>(points: &[Vec<T>], d: usize) -> Vec<(Vec<T>, T)> {
    let mut found = HashSet::new();
    let mut out = Vec::new();
    for_each_combination(points.len(), d, |idx| {
        let base = &points[idx[0]];
        let rows: Vec<Vec<T>> = idx[1..]
            .iter()
            .map(|&i| sub_vec(&points[i], base))
            .collect();
        let Ok(normal) = primitive(&cofactor_normal(&rows, d)) else {
            return;
        };
        let offset = dot(&normal, base);
        let (mut pos, mut neg) = (false, false);
        for p in points {
            let s = dot(&normal, p) - offset.clone();
            pos |= s.is_positive();
            neg |= s.is_negative();
            if pos && neg {
                return;
            }
        }
        let (normal, offset) = if neg {
            (normal.into_iter().map(|x| -x).collect(), -offset)
        } else {
            (normal, offset)
        };
        if found.insert((normal.clone(), offset.clone())) {
            out.push((normal, offset));
        }
    });
    out
}
