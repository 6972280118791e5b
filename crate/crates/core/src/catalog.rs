//! Named polytopes used throughout the tests, examples and the CLI check suite.

use crate::polytope::{free_join, LatticePolytope, VertexSet};
use crate::scalar::{vec_from, Scalar};

fn build<T: Scalar>(points: &[&[i64]]) -> LatticePolytope<T> {
    LatticePolytope::from_i64(points).expect("catalog polytopes are valid")
}

fn from_points<T: Scalar>(points: Vec<Vec<i64>>) -> LatticePolytope<T> {
    LatticePolytope::new(points.iter().map(|p| vec_from(p)).collect())
        .expect("catalog polytopes are valid")
}

fn box_points(d: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..1usize << d)
        .map(|m| {
            (0..d)
                .map(|i| if m >> i & 1 == 1 { hi } else { lo })
                .collect()
        })
        .collect()
}

/// `[0,1]^d`.
pub fn cube<T: Scalar>(d: usize) -> LatticePolytope<T> {
    from_points(box_points(d, 0, 1))
}

/// `[-1,1]^d`.
pub fn centered_cube<T: Scalar>(d: usize) -> LatticePolytope<T> {
    from_points(box_points(d, -1, 1))
}

/// `k Δ_d = conv(0, k e_1, ..., k e_d)`.
pub fn dilated_simplex<T: Scalar>(d: usize, k: i64) -> LatticePolytope<T> {
    let mut pts = vec![vec![0; d]];
    for i in 0..d {
        let mut e = vec![0; d];
        e[i] = k;
        pts.push(e);
    }
    from_points(pts)
}

pub fn standard_simplex<T: Scalar>(d: usize) -> LatticePolytope<T> {
    dilated_simplex(d, 1)
}

/// `conv(±e_i)`.
pub fn cross_polytope<T: Scalar>(d: usize) -> LatticePolytope<T> {
    let mut pts = Vec::new();
    for i in 0..d {
        for s in [1, -1] {
            let mut e = vec![0; d];
            e[i] = s;
            pts.push(e);
        }
    }
    from_points(pts)
}

/// `[a, b]` on the line.
pub fn segment<T: Scalar>(a: i64, b: i64) -> LatticePolytope<T> {
    build(&[&[a], &[b]])
}

/// `conv(e1, e2, -e1-e2)`, the triangle with one interior point.
pub fn reflexive_triangle<T: Scalar>() -> LatticePolytope<T> {
    build(&[&[1, 0], &[0, 1], &[-1, -1]])
}

/// `conv(0, e1, e2, k0 e3, e1 + k1 e3, e2 + k2 e3)`.
pub fn lawrence_prism<T: Scalar>(k: [i64; 3]) -> LatticePolytope<T> {
    build(&[
        &[0, 0, 0],
        &[1, 0, 0],
        &[0, 1, 0],
        &[0, 0, k[0]],
        &[1, 0, k[1]],
        &[0, 1, k[2]],
    ])
}

/// A thin 4-simplex of degree 3 whose lattice points span an index-2
/// sublattice; it has lattice width 2 and is a lattice pyramid only with
/// respect to that sublattice.
pub fn nonspanning_thin_simplex<T: Scalar>() -> LatticePolytope<T> {
    build(&[
        &[0, 0, 0, 0],
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[1, 2, 4, 0],
        &[2, 1, 0, 4],
    ])
}

/// Gorenstein tetrahedron of volume 2 and `h* = 1 + t^2` that is a Cayley
/// join of two edges without being a Gorenstein join.
pub fn cayley_tetrahedron<T: Scalar>() -> LatticePolytope<T> {
    build(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, 1]])
}

/// The edges `conv(e1, e2)` and `conv(e3, (-1,-1,1))` of [`cayley_tetrahedron`].
pub fn cayley_tetrahedron_edges<T: Scalar>(p: &LatticePolytope<T>) -> (VertexSet, VertexSet) {
    let low = VertexSet::from_indices((0..p.num_vertices()).filter(|&i| p.vertex(i)[2].is_zero()));
    (low, p.all_vertices().difference(low))
}

/// A 5-simplex with `l* = 4t^3` and `h* = 1 + t + 4t^2 + 5t^3 + t^4`, so
/// `deg l* < deg h*`.
pub fn simplex_with_low_degree_local_hstar<T: Scalar>() -> LatticePolytope<T> {
    build(&[
        &[0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0],
        &[0, 0, 1, 0, 0],
        &[0, 1, 1, 2, 0],
        &[5, 3, 3, 2, 6],
    ])
}

/// A 5-simplex with `l* = t^3` and `h* = 1 + 5t + 19t^2 + 7t^3`.
pub fn simplex_with_monomial_local_hstar<T: Scalar>() -> LatticePolytope<T> {
    build(&[
        &[0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0],
        &[0, 1, 0, 0, 0],
        &[1, 1, 2, 0, 0],
        &[3, 5, 6, 8, 0],
        &[1, 1, 0, 0, 2],
    ])
}

/// Free join of the reflexive triangle with `2Δ2`: a thin 5-simplex of
/// degree 3.
pub fn thin_join_simplex<T: Scalar>() -> LatticePolytope<T> {
    free_join(&reflexive_triangle(), &dilated_simplex(2, 2))
}
