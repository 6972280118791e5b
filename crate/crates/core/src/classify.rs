//! Thin lattice polytopes in dimension three.
//!
//! A 3-polytope is thin exactly when it is a lattice pyramid over a polygon or
//! a Lawrence prism. Its local h*-polynomial has a closed form in the
//! interior point counts of `P`, `2P` and the facets, which gives a numeric
//! thinness test independent of the face-lattice computation.

use serde::Serialize;

use crate::counting::interior_point_count;
use crate::error::{Error, Result};
use crate::linalg::{primitive, IntMatrix};
use crate::polynomial::IntPolynomial;
use crate::polytope::LatticePolytope;
use crate::scalar::{sub_vec, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct InteriorCounts<T: Scalar> {
    /// `|int(P) ∩ Z^3|`
    #[serde(with = "crate::io::int")]
    pub interior: T,
    /// `|int(2P) ∩ Z^3|`
    #[serde(with = "crate::io::int")]
    pub interior_2p: T,
    /// Sum over facets of their relative interior point counts.
    #[serde(with = "crate::io::int")]
    pub facet_interior_sum: T,
}

fn require_dim3<T: Scalar>(p: &LatticePolytope<T>) -> Result<()> {
    if p.dim() == 3 {
        Ok(())
    } else {
        Err(Error::WrongDimension {
            expected: 3,
            found: p.dim(),
        })
    }
}

pub fn interior_counts<T: Scalar>(p: &LatticePolytope<T>) -> Result<InteriorCounts<T>> {
    require_dim3(p)?;
    let interior = interior_point_count(p);
    let interior_2p = crate::counting::count_lattice_points(p, &T::from_int(2), true);
    let mut facet_interior_sum = T::zero();
    for f in p.facets() {
        facet_interior_sum =
            facet_interior_sum + interior_point_count(&p.face_polytope(f.vertices)?);
    }
    Ok(InteriorCounts {
        interior,
        interior_2p,
        facet_interior_sum,
    })
}

/// `l*(P) = i (t + t^3) + (i_2 - 4 i - Σ_F i_F) t^2` with `i = |int(P)|`,
/// `i_2 = |int(2P)|` and `i_F` the facet interior counts.
pub fn lstar_3d<T: Scalar>(p: &LatticePolytope<T>) -> Result<IntPolynomial<T>> {
    let c = interior_counts(p)?;
    let middle = c.interior_2p - T::from_int(4) * c.interior.clone() - c.facet_interior_sum;
    Ok(IntPolynomial::new(vec![
        T::zero(),
        c.interior.clone(),
        middle,
        c.interior,
    ]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct InequalityVerdict<T: Scalar> {
    #[serde(with = "crate::io::int")]
    pub lhs: T,
    #[serde(with = "crate::io::int")]
    pub rhs: T,
    pub holds: bool,
}

/// `|int(2P)| >= 5 |int(P)| + Σ_F |int(F)|`.
pub fn interior_inequality_check<T: Scalar>(
    p: &LatticePolytope<T>,
) -> Result<InequalityVerdict<T>> {
    let c = interior_counts(p)?;
    let rhs = T::from_int(5) * c.interior + c.facet_interior_sum;
    Ok(InequalityVerdict {
        holds: c.interior_2p >= rhs,
        lhs: c.interior_2p,
        rhs,
    })
}

/// Hollow and `|int(2P)| = Σ_F |int(F)|`.
pub fn thin_criterion_3d<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    let c = interior_counts(p)?;
    Ok(c.interior.is_zero() && c.interior_2p == c.facet_interior_sum)
}

/// `P ≅ conv(0, e1, e2, k0 e3, e1 + k1 e3, e2 + k2 e3)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct LawrenceWitness<T: Scalar> {
    /// Primitive direction of the three parallel edges, in input coordinates.
    #[serde(with = "crate::io::ints")]
    pub direction: Vec<T>,
    /// Edge lengths in units of `direction`.
    #[serde(with = "crate::io::ints")]
    pub heights: Vec<T>,
    /// For each edge, its (lower, upper) vertex indices.
    pub edges: Vec<(usize, usize)>,
}

/// Searches edge directions for three parallel edges through all six
/// vertices whose projection along the direction is a unimodular triangle.
pub fn lawrence_structure<T: Scalar>(p: &LatticePolytope<T>) -> Result<Option<LawrenceWitness<T>>> {
    require_dim3(p)?;
    if p.num_vertices() != 6 {
        return Ok(None);
    }
    let vs = p.vertices();
    for i in 0..6 {
        for j in i + 1..6 {
            let w = primitive(&sub_vec(&vs[j], &vs[i]))?;
            if let Some(witness) = prism_along(p, &w) {
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

fn prism_along<T: Scalar>(p: &LatticePolytope<T>, w: &[T]) -> Option<LawrenceWitness<T>> {
    let vs = p.vertices();
    let k = w.iter().position(|x| !x.is_zero())?;
    let mut used = [false; 6];
    let mut edges = Vec::new();
    let mut heights = Vec::new();
    for a in 0..6 {
        if used[a] {
            continue;
        }
        let partners: Vec<(usize, T)> = (0..6)
            .filter(|&b| b != a)
            .filter_map(|b| {
                let diff = sub_vec(&vs[b], &vs[a]);
                let (q, r) = (
                    diff[k].clone() / w[k].clone(),
                    diff[k].clone() % w[k].clone(),
                );
                let parallel =
                    r.is_zero() && diff.iter().zip(w).all(|(x, y)| *x == q.clone() * y.clone());
                parallel.then_some((b, q))
            })
            .collect();
        let [(b, q)] = partners.as_slice() else {
            return None;
        };
        if used[*b] {
            return None;
        }
        used[a] = true;
        used[*b] = true;
        if q.is_positive() {
            edges.push((a, *b));
            heights.push(q.clone());
        } else {
            edges.push((*b, a));
            heights.push(-q.clone());
        }
    }
    let rows = vec![
        w.to_vec(),
        sub_vec(&vs[edges[1].0], &vs[edges[0].0]),
        sub_vec(&vs[edges[2].0], &vs[edges[0].0]),
    ];
    let det = IntMatrix::from_rows(rows, 3).ok()?.determinant().ok()?;
    if !det.abs().is_one() {
        return None;
    }
    let direction = p.embedding().apply(w);
    let origin = p.embedding().apply(&vec![T::zero(); 3]);
    Some(LawrenceWitness {
        direction: sub_vec(&direction, &origin),
        heights,
        edges,
    })
}

pub fn is_lawrence_prism<T: Scalar>(p: &LatticePolytope<T>) -> Result<bool> {
    Ok(lawrence_structure(p)?.is_some())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
#[serde(tag = "verdict")]
pub enum Thin3DClassification<T: Scalar> {
    PyramidOverPolygon {
        #[serde(with = "crate::io::ints")]
        apex: Vec<T>,
        #[serde(with = "crate::io::points")]
        base: Vec<Vec<T>>,
    },
    LawrencePrism(LawrenceWitness<T>),
    /// The interior counts violating the thinness criterion.
    NotThin(InteriorCounts<T>),
}

impl<T: Scalar> Thin3DClassification<T> {
    pub fn is_thin(&self) -> bool {
        !matches!(self, Self::NotThin(_))
    }
}

/// Pyramid or Lawrence prism witness, cross-checked against the numeric
/// criterion. Disagreement is reported as a falsification.
pub fn classify_thin_3d<T: Scalar>(p: &LatticePolytope<T>) -> Result<Thin3DClassification<T>> {
    let counts = interior_counts(p)?;
    let criterion = counts.interior.is_zero() && counts.interior_2p == counts.facet_interior_sum;
    let verdict = if let Some(w) = p.pyramid_structure() {
        let ambient = p.ambient_vertices();
        let base_facet = &p.facets()[w.base_facet.expect("3-polytope pyramid has a base")];
        Thin3DClassification::PyramidOverPolygon {
            apex: ambient[w.apex].clone(),
            base: base_facet
                .vertices
                .iter()
                .map(|i| ambient[i].clone())
                .collect(),
        }
    } else if let Some(w) = lawrence_structure(p)? {
        Thin3DClassification::LawrencePrism(w)
    } else {
        Thin3DClassification::NotThin(counts)
    };
    if verdict.is_thin() != criterion {
        return Err(Error::Falsification(format!(
            "structural verdict thin={} disagrees with the interior-count criterion for {:?}",
            verdict.is_thin(),
            p.ambient_vertices()
        )));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::local::local_hstar;

    type P = LatticePolytope<i64>;

    fn poly(pts: &[&[i64]]) -> P {
        P::from_i64(pts).unwrap()
    }

    #[test]
    fn closed_form_on_cubes() {
        let c = interior_counts(&catalog::cube::<i64>(3)).unwrap();
        assert_eq!((c.interior, c.interior_2p, c.facet_interior_sum), (0, 1, 0));
        assert_eq!(
            lstar_3d(&catalog::cube::<i64>(3)).unwrap().coeffs(),
            &[0, 0, 1]
        );
        let c = interior_counts(&catalog::centered_cube::<i64>(3)).unwrap();
        assert_eq!(
            (c.interior, c.interior_2p, c.facet_interior_sum),
            (1, 27, 6)
        );
        assert_eq!(
            lstar_3d(&catalog::centered_cube::<i64>(3))
                .unwrap()
                .coeffs(),
            &[0, 1, 17, 1]
        );
        assert!(lstar_3d(&catalog::standard_simplex::<i64>(3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        let sq = catalog::cube::<i64>(2);
        assert_eq!(
            lstar_3d(&sq),
            Err(Error::WrongDimension {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn inequality_sides() {
        let v = interior_inequality_check(&catalog::centered_cube::<i64>(3)).unwrap();
        assert_eq!((v.lhs, v.rhs, v.holds), (27, 11, true));
        let v = interior_inequality_check(&catalog::standard_simplex::<i64>(3)).unwrap();
        assert_eq!((v.lhs, v.rhs, v.holds), (0, 0, true));
    }

    #[test]
    fn criterion_examples() {
        let pyr = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]);
        assert!(thin_criterion_3d(&pyr).unwrap());
        assert!(!thin_criterion_3d(&catalog::cube::<i64>(3)).unwrap());
        assert!(!thin_criterion_3d(&catalog::dilated_simplex::<i64>(3, 2)).unwrap());
    }

    #[test]
    fn lawrence_round_trip() {
        let w = lawrence_structure(&catalog::lawrence_prism::<i64>([1, 2, 3]))
            .unwrap()
            .unwrap();
        let mut h = w.heights.clone();
        h.sort();
        assert_eq!(h, vec![1, 2, 3]);
        assert_eq!(w.direction, vec![0, 0, 1]);
        assert!(is_lawrence_prism(&catalog::lawrence_prism::<i64>([1, 1, 1])).unwrap());
        assert!(!is_lawrence_prism(&catalog::cube::<i64>(3)).unwrap());
        assert!(!is_lawrence_prism(&catalog::standard_simplex::<i64>(3)).unwrap());
    }

    #[test]
    fn lawrence_detection_survives_unimodular_maps() {
        // (x, y, z) -> (x + 2z, x + y, 3x + 3y + z)
        let base = catalog::lawrence_prism::<i64>([2, 1, 4]);
        let image: Vec<Vec<i64>> = base
            .vertices()
            .iter()
            .map(|v| vec![v[0] + 2 * v[2], v[0] + v[1], 3 * v[0] + 3 * v[1] + v[2]])
            .collect();
        let w = lawrence_structure(&P::new(image).unwrap())
            .unwrap()
            .unwrap();
        let mut h = w.heights.clone();
        h.sort();
        assert_eq!(h, vec![1, 2, 4]);
    }

    #[test]
    fn classification_examples() {
        let pyr = lattice_pyramid_over(&catalog::dilated_simplex::<i64>(2, 2));
        assert!(matches!(
            classify_thin_3d(&pyr).unwrap(),
            Thin3DClassification::PyramidOverPolygon { .. }
        ));
        let lp = catalog::lawrence_prism::<i64>([1, 1, 2]);
        assert!(matches!(
            classify_thin_3d(&lp).unwrap(),
            Thin3DClassification::LawrencePrism(_)
        ));
        assert!(local_hstar(&lp).unwrap().lstar.is_zero());
        assert!(matches!(
            classify_thin_3d(&catalog::cube::<i64>(3)).unwrap(),
            Thin3DClassification::NotThin(_)
        ));
    }

    fn lattice_pyramid_over(p: &P) -> P {
        crate::polytope::lattice_pyramid(p)
    }

    #[test]
    fn serializes_with_verdict_tag() {
        let v = classify_thin_3d(&catalog::lawrence_prism::<i64>([1, 1, 2])).unwrap();
        let j = serde_json::to_value(&v).unwrap();
        assert_eq!(j["verdict"], "LawrencePrism");
    }
}
