use std::collections::{HashMap, VecDeque};

use super::{LatticePolytope, VertexSet};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub vertices: VertexSet,
    /// −1 for the empty face.
    pub dim: isize,
}

impl Face {
    /// Rank in the face lattice, `dim + 1`.
    pub fn rank(&self) -> usize {
        (self.dim + 1) as usize
    }
}

/// All faces `∅ ≤ F ≤ P`, ordered by dimension then vertex set; index 0 is
/// the empty face and the last index is `P`.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    index: HashMap<VertexSet, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl FaceLattice {
    pub(crate) fn build<T: Scalar>(p: &LatticePolytope<T>) -> Self {
        let top = p.all_vertices();
        let mut sets = vec![top];
        let mut seen: HashMap<VertexSet, ()> = HashMap::from([(top, ())]);
        let mut queue = VecDeque::from([top]);
        while let Some(f) = queue.pop_front() {
            for facet in p.facets() {
                let g = f.intersection(facet.vertices);
                if g != f && !g.is_empty() && seen.insert(g, ()).is_none() {
                    sets.push(g);
                    queue.push_back(g);
                }
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|s| Face {
                vertices: s,
                dim: p.face_dim(s),
            })
            .collect();
        faces.push(Face {
            vertices: VertexSet::empty(),
            dim: -1,
        });
        faces.sort_by_key(|f| (f.dim, f.vertices));
        Self::from_faces(faces)
    }

    fn from_faces(faces: Vec<Face>) -> Self {
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertices, i))
            .collect();
        let mut up = vec![Vec::new(); faces.len()];
        let mut down = vec![Vec::new(); faces.len()];
        for (i, f) in faces.iter().enumerate() {
            for (j, g) in faces.iter().enumerate() {
                if g.dim == f.dim + 1 && f.vertices.is_subset(g.vertices) {
                    up[i].push(j);
                    down[j].push(i);
                }
            }
        }
        Self {
            faces,
            index,
            up,
            down,
        }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> Face {
        self.faces[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn dim(&self, i: usize) -> isize {
        self.faces[i].dim
    }

    pub fn rank(&self, i: usize) -> usize {
        self.faces[i].rank()
    }

    pub fn index_of(&self, vertices: VertexSet) -> Option<usize> {
        self.index.get(&vertices).copied()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.faces[a].vertices.is_subset(self.faces[b].vertices)
    }

    /// Faces covering `i`.
    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Faces covered by `i`.
    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// Indices `k` with `lo ≤ k ≤ hi`, in lattice order.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (lo..=hi)
            .filter(|&k| self.leq(lo, k) && self.leq(k, hi))
            .collect()
    }

    /// Number of faces of each dimension `−1 ..= d`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.faces.last().map_or(-1, |f| f.dim);
        (-1..=d)
            .map(|k| self.faces.iter().filter(|f| f.dim == k).count())
            .collect()
    }

    pub fn faces_of_dim(&self, k: isize) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&i| self.faces[i].dim == k)
    }

    /// Every interval `[x, y]` with `x < y` has as many even-rank as
    /// odd-rank elements.
    pub fn is_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            (x + 1..self.len()).filter(|&y| self.leq(x, y)).all(|y| {
                let iv = self.interval(x, y);
                let even = iv.iter().filter(|&&k| self.rank(k).is_multiple_of(2)).count();
                2 * even == iv.len()
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::catalog;
    use crate::polytope::LatticePolytope;

    type P = LatticePolytope<i64>;

    #[test]
    fn simplex_lattice_is_boolean() {
        for d in 1..=4 {
            let s: P = catalog::standard_simplex(d);
            assert_eq!(s.face_lattice().len(), 1 << (d + 1));
        }
    }

    #[test]
    fn square_has_ten_faces() {
        let sq: P = catalog::cube(2);
        assert_eq!(sq.face_lattice().f_vector(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn cube_upper_interval_of_a_vertex() {
        let c: P = catalog::cube(3);
        let fl = c.face_lattice();
        assert_eq!(fl.f_vector(), vec![1, 8, 12, 6, 1]);
        let v = fl.faces_of_dim(0).next().unwrap();
        let above: Vec<usize> = fl.interval(v, fl.top());
        let count = |k| above.iter().filter(|&&i| fl.dim(i) == k).count();
        assert_eq!((count(0), count(1), count(2), count(3)), (1, 3, 3, 1));
    }

    #[test]
    fn ridges_lie_in_exactly_two_facets() {
        for p in [
            catalog::cube::<i64>(3),
            catalog::cross_polytope(3),
            catalog::nonspanning_thin_simplex(),
        ] {
            let fl = p.face_lattice();
            let d = p.dim() as isize;
            for r in fl.faces_of_dim(d - 2) {
                assert_eq!(fl.covers_up(r).len(), 2);
            }
            assert!(fl.is_eulerian());
        }
    }

    #[test]
    fn faces_are_intersections_of_their_facets() {
        let p: P = catalog::cayley_tetrahedron();
        let fl = p.face_lattice();
        for f in fl.faces().iter().filter(|f| f.dim >= 0) {
            let meet = p
                .facets()
                .iter()
                .filter(|x| f.vertices.is_subset(x.vertices))
                .fold(p.all_vertices(), |a, x| a.intersection(x.vertices));
            assert_eq!(meet, f.vertices);
        }
    }
}
