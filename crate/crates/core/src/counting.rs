//! Lattice points, Ehrhart data, box polynomials and Newton numbers.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{hermite_normal_form, IntMatrix};
use crate::polynomial::IntPolynomial;
use crate::polytope::LatticePolytope;
use crate::scalar::{dot, Scalar};

/// Row-major scan of the bounding box of `nP` with the last scanned
/// coordinate solved as an interval. Calls `visit(prefix, lo, hi)` for each
/// nonempty run `lo..=hi` of the coordinate `axis`.
fn scan_runs<T: Scalar>(
    p: &LatticePolytope<T>,
    n: &T,
    interior: bool,
    mut visit: impl FnMut(&[T], usize, &T, &T),
) {
    let d = p.dim();
    let lo: Vec<T> = (0..d)
        .map(|i| {
            p.vertices()
                .iter()
                .map(|v| v[i].clone())
                .min()
                .expect("vertex")
                * n.clone()
        })
        .collect();
    let hi: Vec<T> = (0..d)
        .map(|i| {
            p.vertices()
                .iter()
                .map(|v| v[i].clone())
                .max()
                .expect("vertex")
                * n.clone()
        })
        .collect();
    let axis = (0..d)
        .max_by_key(|&i| (hi[i].clone() - lo[i].clone(), std::cmp::Reverse(i)))
        .expect("d > 0");
    let others: Vec<usize> = (0..d).filter(|&i| i != axis).collect();
    let mut x = lo.clone();
    x[axis] = T::zero();
    'outer: loop {
        let (mut a, mut b) = (lo[axis].clone(), hi[axis].clone());
        let mut ok = true;
        for f in p.facets() {
            // f.normal[axis] * t >= n * offset - rest (strict for interior)
            let c = f.normal[axis].clone();
            let rest = dot(&f.normal, &x) - c.clone() * x[axis].clone();
            let mut rhs = n.clone() * f.offset.clone() - rest;
            if interior {
                rhs = rhs + T::one();
            }
            if c.is_zero() {
                if rhs.is_positive() {
                    ok = false;
                    break;
                }
            } else if c.is_positive() {
                a = a.max(rhs.div_ceil(&c));
            } else {
                b = b.min(rhs.div_floor(&c));
            }
        }
        if ok && a <= b {
            visit(&x, axis, &a, &b);
        }
        for &k in others.iter().rev() {
            if x[k] < hi[k] {
                x[k] = x[k].clone() + T::one();
                continue 'outer;
            }
            x[k] = lo[k].clone();
        }
        break;
    }
}

/// Lattice points of `nP` (of its interior when `interior` is set), in
/// working coordinates and lexicographic order of the scan.
pub fn lattice_points<T: Scalar>(p: &LatticePolytope<T>, n: &T, interior: bool) -> Vec<Vec<T>> {
    if p.dim() == 0 {
        return if interior && n.is_zero() {
            Vec::new()
        } else {
            vec![Vec::new()]
        };
    }
    let mut out = Vec::new();
    scan_runs(p, n, interior, |x, axis, a, b| {
        let mut t = a.clone();
        while t <= *b {
            let mut y = x.to_vec();
            y[axis] = t.clone();
            out.push(y);
            t = t + T::one();
        }
    });
    out.sort();
    out
}

/// `|nP ∩ Z^d|`, or the interior count.
pub fn count_lattice_points<T: Scalar>(p: &LatticePolytope<T>, n: &T, interior: bool) -> T {
    if p.dim() == 0 {
        return if interior && n.is_zero() {
            T::zero()
        } else {
            T::one()
        };
    }
    let mut total = T::zero();
    scan_runs(p, n, interior, |_, _, a, b| {
        total = total.clone() + b.clone() - a.clone() + T::one()
    });
    total
}

pub fn interior_point_count<T: Scalar>(p: &LatticePolytope<T>) -> T {
    count_lattice_points(p, &T::one(), true)
}

pub fn is_hollow<T: Scalar>(p: &LatticePolytope<T>) -> bool {
    interior_point_count(p).is_zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound = "")]
pub struct EhrhartData<T: Scalar> {
    pub dim: usize,
    /// `|nP ∩ Z^d|` for `n = 0..=dim`.
    #[serde(with = "crate::io::ints")]
    pub dilate_counts: Vec<T>,
    pub hstar: IntPolynomial<T>,
    /// Normalized volume, `h*(1)`.
    #[serde(with = "crate::io::int")]
    pub volume: T,
    pub degree: usize,
    pub codegree: usize,
}

fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    (0..k).fold(T::one(), |acc, i| {
        acc * T::from_count(n - i) / T::from_count(i + 1)
    })
}

/// Ehrhart data from the dilate counts `n = 0..=d`.
pub fn hstar<T: Scalar>(p: &LatticePolytope<T>) -> EhrhartData<T> {
    let d = p.dim();
    let counts: Vec<T> = (0..=d)
        .map(|n| count_lattice_points(p, &T::from_count(n), false))
        .collect();
    let coeffs: Vec<T> = (0..=d)
        .map(|k| {
            (0..=k).fold(T::zero(), |acc, j| {
                let term = binomial::<T>(d + 1, j) * counts[k - j].clone();
                if j % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    EhrhartData::from_hstar(d, IntPolynomial::new(coeffs), counts)
}

impl<T: Scalar> EhrhartData<T> {
    fn from_hstar(dim: usize, hstar: IntPolynomial<T>, dilate_counts: Vec<T>) -> Self {
        let degree = hstar.degree();
        Self {
            dim,
            dilate_counts,
            volume: hstar.at_one(),
            degree,
            codegree: dim + 1 - degree,
            hstar,
        }
    }
}

/// Lattice points of the half-open parallelepiped spanned by the rows
/// `(v_i, 1)` of a simplex, as barycentric numerators over `denominator`.
pub struct Parallelepiped<T> {
    pub denominator: T,
    /// For each point, `λ_i · denominator` with every `λ_i ∈ [0, 1)`.
    pub points: Vec<Vec<T>>,
}

impl<T: Scalar> Parallelepiped<T> {
    pub fn height(&self, lambda: &[T]) -> usize {
        let s = lambda.iter().fold(T::zero(), |a, x| a + x.clone());
        (s / self.denominator.clone()).as_count()
    }
}

/// Enumerates the parallelepiped points of a simplex from coset
/// representatives of `Z^{d+1}` modulo the lattice of its cone generators.
pub fn parallelepiped<T: Scalar>(s: &LatticePolytope<T>) -> Result<Parallelepiped<T>> {
    s.require_simplex()?;
    let d = s.dim();
    let rows: Vec<Vec<T>> = s
        .vertices()
        .iter()
        .map(|v| {
            let mut r = v.clone();
            r.push(T::one());
            r
        })
        .collect();
    let r = IntMatrix::from_rows(rows, d + 1)?;
    let mut det = r.determinant()?;
    let mut adj = r.adjugate()?;
    if det.is_negative() {
        det = -det;
        adj = adj.map(|x| -x);
    }
    let h = hermite_normal_form(&r).h;
    let diag: Vec<T> = (0..=d).map(|i| h[(i, i)].clone()).collect();
    let adj_t = adj.transpose();
    let mut points = Vec::with_capacity(det.as_count());
    let mut x = vec![T::zero(); d + 1];
    loop {
        // λ·det = x · adj(R)
        let mu: Vec<T> = adj_t
            .mul_vec(&x)
            .into_iter()
            .map(|m| m.mod_floor(&det))
            .collect();
        points.push(mu);
        let mut k = 0;
        loop {
            if k > d {
                points.sort();
                return Ok(Parallelepiped {
                    denominator: det,
                    points,
                });
            }
            x[k] = x[k].clone() + T::one();
            if x[k] < diag[k] {
                break;
            }
            x[k] = T::zero();
            k += 1;
        }
    }
}

/// Number of interior parallelepiped points by height; this is `l*` of the
/// simplex.
pub fn box_polynomial<T: Scalar>(s: &LatticePolytope<T>) -> Result<IntPolynomial<T>> {
    let pp = parallelepiped(s)?;
    let mut coeffs = vec![T::zero(); s.dim() + 2];
    for mu in pp
        .points
        .iter()
        .filter(|mu| mu.iter().all(|m| m.is_positive()))
    {
        let h = pp.height(mu);
        coeffs[h] = coeffs[h].clone() + T::one();
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `h*` of a simplex from all parallelepiped points by height.
pub fn simplex_hstar<T: Scalar>(s: &LatticePolytope<T>) -> Result<EhrhartData<T>> {
    let pp = parallelepiped(s)?;
    let mut coeffs = vec![T::zero(); s.dim() + 1];
    for mu in &pp.points {
        let h = pp.height(mu);
        coeffs[h] = coeffs[h].clone() + T::one();
    }
    Ok(EhrhartData::from_hstar(
        s.dim(),
        IntPolynomial::new(coeffs),
        Vec::new(),
    ))
}

/// Normalized volume `h*(1)` in the lattice of the affine hull.
pub fn lattice_volume<T: Scalar>(p: &LatticePolytope<T>) -> T {
    if p.dim() == 0 {
        return T::one();
    }
    if p.is_simplex() {
        let v0 = p.vertex(0);
        let rows = p.vertices()[1..]
            .iter()
            .map(|v| crate::scalar::sub_vec(v, v0))
            .collect();
        return IntMatrix::from_rows(rows, p.dim())
            .and_then(|m| m.determinant())
            .expect("square")
            .abs();
    }
    hstar(p).volume
}

/// `Σ_F (-1)^{dim P - dim F} vol(F)` over all faces including `∅` (volume 1).
/// For simplices this is `l*(1)`; for other polytopes it may be negative.
pub fn newton_number<T: Scalar>(p: &LatticePolytope<T>) -> T {
    let fl = p.face_lattice();
    let d = p.dim() as isize;
    fl.faces().iter().fold(T::zero(), |acc, f| {
        let vol = if f.dim < 0 {
            T::one()
        } else {
            lattice_volume(&p.face_polytope(f.vertices).expect("face"))
        };
        if (d - f.dim) % 2 == 0 {
            acc + vol
        } else {
            acc - vol
        }
    })
}
