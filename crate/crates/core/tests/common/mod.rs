//! Shared corpus and brute-force oracles for the integration tests.
//!
//! The oracles work directly on `i64` vertex lists and share no code with
//! the library: facets come from exhaustive hyperplane search, lattice points
//! from scanning a bounding box, and parallelepiped points from Cramer's rule.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ehrhart::{catalog, free_join, lattice_pyramid, Polytope64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type P = Polytope64;

pub fn poly(pts: &[&[i64]]) -> P {
    P::from_i64(pts).unwrap()
}

pub fn coeffs(p: &ehrhart::Polynomial64) -> Vec<i64> {
    p.coeffs().to_vec()
}

// ---------------------------------------------------------------- oracles

/// Determinant by cofactor expansion.
pub fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Facet inequalities `a · x >= b` of a full-dimensional hull, found by
/// trying every hyperplane through `d` of the points.
pub fn oracle_facets(pts: &[Vec<i64>]) -> Vec<(Vec<i64>, i64)> {
    let d = pts[0].len();
    let mut out = BTreeSet::new();
    let mut idx: Vec<usize> = (0..d).collect();
    loop {
        let base = &pts[idx[0]];
        let rows: Vec<Vec<i64>> = idx[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(x, y)| x - y).collect())
            .collect();
        let normal: Vec<i64> = (0..d)
            .map(|j| {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                if j % 2 == 0 {
                    det(&minor)
                } else {
                    -det(&minor)
                }
            })
            .collect();
        let g = normal.iter().fold(0, |g, &x| gcd(g, x));
        if g != 0 {
            let a: Vec<i64> = normal.iter().map(|x| x / g).collect();
            let b: i64 = a.iter().zip(base).map(|(x, y)| x * y).sum();
            let vals: Vec<i64> = pts
                .iter()
                .map(|p| a.iter().zip(p).map(|(x, y)| x * y).sum::<i64>() - b)
                .collect();
            if vals.iter().all(|&v| v >= 0) {
                out.insert((a, b));
            } else if vals.iter().all(|&v| v <= 0) {
                out.insert((a.iter().map(|x| -x).collect(), -b));
            }
        }
        // next d-subset
        let mut k = d;
        loop {
            if k == 0 {
                return out.into_iter().collect();
            }
            k -= 1;
            if idx[k] < pts.len() - d + k {
                idx[k] += 1;
                for m in k + 1..d {
                    idx[m] = idx[m - 1] + 1;
                }
                break;
            }
        }
    }
}

fn for_each_box_point(lo: &[i64], hi: &[i64], mut f: impl FnMut(&[i64])) {
    let d = lo.len();
    let mut x = lo.to_vec();
    loop {
        f(&x);
        let mut k = d;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if x[k] < hi[k] {
                x[k] += 1;
                break;
            }
            x[k] = lo[k];
        }
    }
}

/// `|nP ∩ Z^d|` (interior when asked) by scanning the bounding box.
pub fn oracle_count(pts: &[Vec<i64>], n: i64, interior: bool) -> i64 {
    let facets = oracle_facets(pts);
    let d = pts[0].len();
    let lo: Vec<i64> = (0..d)
        .map(|j| n * pts.iter().map(|p| p[j]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|j| n * pts.iter().map(|p| p[j]).max().unwrap())
        .collect();
    let mut count = 0;
    for_each_box_point(&lo, &hi, |x| {
        let ok = facets.iter().all(|(a, b)| {
            let s: i64 = a.iter().zip(x).map(|(u, v)| u * v).sum::<i64>() - n * b;
            if interior {
                s > 0
            } else {
                s >= 0
            }
        });
        if ok {
            count += 1;
        }
    });
    count
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h*` from brute-force dilate counts, trailing zeros trimmed.
pub fn oracle_hstar(pts: &[Vec<i64>]) -> Vec<i64> {
    let d = pts[0].len() as i64;
    let counts: Vec<i64> = (0..=d)
        .map(|n| {
            if n == 0 {
                1
            } else {
                oracle_count(pts, n, false)
            }
        })
        .collect();
    let mut h: Vec<i64> = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|j| {
                    (if j % 2 == 0 { 1 } else { -1 }) * binom(d + 1, j) * counts[(k - j) as usize]
                })
                .sum()
        })
        .collect();
    while h.len() > 1 && *h.last().unwrap() == 0 {
        h.pop();
    }
    h
}

/// Relative interior point counts of the facets of a full-dimensional hull.
pub fn oracle_facet_interiors(pts: &[Vec<i64>]) -> Vec<i64> {
    let facets = oracle_facets(pts);
    let d = pts[0].len();
    let lo: Vec<i64> = (0..d)
        .map(|j| pts.iter().map(|p| p[j]).min().unwrap())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|j| pts.iter().map(|p| p[j]).max().unwrap())
        .collect();
    facets
        .iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let mut c = 0;
            for_each_box_point(&lo, &hi, |x| {
                let dot = |a: &Vec<i64>| a.iter().zip(x).map(|(u, v)| u * v).sum::<i64>();
                if dot(a) == *b
                    && facets
                        .iter()
                        .enumerate()
                        .all(|(j, (a2, b2))| j == i || dot(a2) > *b2)
                {
                    c += 1;
                }
            });
            c
        })
        .collect()
}

/// `l*` of a 3-polytope from brute-force interior counts.
pub fn oracle_lstar_3d(pts: &[Vec<i64>]) -> Vec<i64> {
    let i1 = oracle_count(pts, 1, true);
    let i2 = oracle_count(pts, 2, true);
    let s: i64 = oracle_facet_interiors(pts).iter().sum();
    let mut l = vec![0, i1, i2 - 4 * i1 - s, i1];
    while l.last() == Some(&0) {
        l.pop();
    }
    l
}

/// `(h*, l*)` of a full-dimensional simplex from the points of its half-open
/// fundamental parallelepiped, located by Cramer's rule.
pub fn oracle_simplex_polys(vertices: &[Vec<i64>]) -> (Vec<i64>, Vec<i64>) {
    let d = vertices[0].len();
    let cols: Vec<Vec<i64>> = vertices
        .iter()
        .map(|v| v.iter().copied().chain([1]).collect())
        .collect();
    let m: Vec<Vec<i64>> = (0..=d)
        .map(|r| cols.iter().map(|c| c[r]).collect())
        .collect();
    let dm = det(&m);
    let lo: Vec<i64> = (0..d)
        .map(|j| vertices.iter().map(|v| v[j].min(0)).sum())
        .collect();
    let hi: Vec<i64> = (0..d)
        .map(|j| vertices.iter().map(|v| v[j].max(0)).sum())
        .collect();
    // adj[i][r]: cofactor of entry (r, i), so λ_i · det = Σ_r adj[i][r] x_r
    let adj: Vec<Vec<i64>> = (0..=d)
        .map(|i| {
            (0..=d)
                .map(|r| {
                    let minor: Vec<Vec<i64>> = (0..=d)
                        .filter(|&rr| rr != r)
                        .map(|rr| (0..=d).filter(|&c| c != i).map(|c| m[rr][c]).collect())
                        .collect();
                    if (i + r) % 2 == 0 {
                        det(&minor)
                    } else {
                        -det(&minor)
                    }
                })
                .collect()
        })
        .collect();
    let mut h = vec![0i64; d + 2];
    let mut l = vec![0i64; d + 2];
    for height in 0..=d as i64 {
        for_each_box_point(&lo, &hi, |x| {
            let mut all_pos = true;
            for row in &adj {
                let num: i64 =
                    row[..d].iter().zip(x).map(|(a, b)| a * b).sum::<i64>() + row[d] * height;
                let (num, den) = if dm < 0 { (-num, -dm) } else { (num, dm) };
                if num < 0 || num >= den {
                    return;
                }
                all_pos &= num > 0;
            }
            h[height as usize] += 1;
            if all_pos {
                l[height as usize] += 1;
            }
        });
    }
    for v in [&mut h, &mut l] {
        while v.last() == Some(&0) {
            v.pop();
        }
    }
    (h, l)
}

// ----------------------------------------------------------------- corpus

/// Named polytopes of dimension at most 4.
pub fn named_corpus() -> Vec<(String, P)> {
    let mut out: Vec<(String, P)> = vec![
        ("point".into(), poly(&[&[0, 0]])),
        ("segment [0,1]".into(), catalog::segment(0, 1)),
        ("segment [-1,1]".into(), catalog::segment(-1, 1)),
        ("segment [0,3]".into(), catalog::segment(0, 3)),
        ("unit square".into(), catalog::cube(2)),
        ("centered square".into(), catalog::centered_cube(2)),
        ("2Δ2".into(), catalog::dilated_simplex(2, 2)),
        ("3Δ2".into(), catalog::dilated_simplex(2, 3)),
        ("reflexive triangle".into(), catalog::reflexive_triangle()),
        (
            "hexagon".into(),
            poly(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]),
        ),
        ("unit cube".into(), catalog::cube(3)),
        ("centered cube".into(), catalog::centered_cube(3)),
        ("octahedron".into(), catalog::cross_polytope(3)),
        ("Δ3".into(), catalog::standard_simplex(3)),
        ("2Δ3".into(), catalog::dilated_simplex(3, 2)),
        ("cayley tetrahedron".into(), catalog::cayley_tetrahedron()),
        (
            "lawrence prism 112".into(),
            catalog::lawrence_prism([1, 1, 2]),
        ),
        (
            "lawrence prism 123".into(),
            catalog::lawrence_prism([1, 2, 3]),
        ),
        (
            "pyramid over 2Δ2".into(),
            lattice_pyramid(&catalog::dilated_simplex(2, 2)),
        ),
        (
            "pyramid over square".into(),
            lattice_pyramid(&catalog::cube(2)),
        ),
        (
            "pyramid over hexagon".into(),
            lattice_pyramid(&poly(&[
                &[1, 0],
                &[0, 1],
                &[-1, 1],
                &[-1, 0],
                &[0, -1],
                &[1, -1],
            ])),
        ),
        (
            "[-1,1] join [-1,1]".into(),
            free_join(&catalog::segment(-1, 1), &catalog::segment(-1, 1)),
        ),
        (
            "reflexive simplex".into(),
            poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
        ),
        (
            "nonspanning thin simplex".into(),
            catalog::nonspanning_thin_simplex(),
        ),
        (
            "[-1,1] join 2Δ2".into(),
            free_join(&catalog::segment(-1, 1), &catalog::dilated_simplex(2, 2)),
        ),
        ("4-cube".into(), catalog::cube(4)),
        ("4-cross-polytope".into(), catalog::cross_polytope(4)),
        ("2Δ4".into(), catalog::dilated_simplex(4, 2)),
        (
            "pyramid over centered cube".into(),
            lattice_pyramid(&catalog::centered_cube(3)),
        ),
        (
            "square x segment prism 4d".into(),
            poly(&[
                &[0, 0, 0, 0],
                &[1, 0, 0, 0],
                &[0, 1, 0, 0],
                &[1, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[0, 0, 1, 1],
            ]),
        ),
    ];
    out.push((
        "cross 3 join point".into(),
        lattice_pyramid(&catalog::cross_polytope(3)),
    ));
    out
}

/// The named five-dimensional simplices.
pub fn named_5d() -> Vec<(String, P)> {
    vec![
        (
            "low-degree l* 5-simplex".into(),
            catalog::simplex_with_low_degree_local_hstar(),
        ),
        (
            "monomial l* 5-simplex".into(),
            catalog::simplex_with_monomial_local_hstar(),
        ),
        ("triangle join 2Δ2".into(), catalog::thin_join_simplex()),
    ]
}

/// Hull of random points with coordinates in `[lo, hi]`, retried until it
/// is full-dimensional.
pub fn random_polytope(rng: &mut ChaCha8Rng, d: usize, npts: usize, lo: i64, hi: i64) -> P {
    loop {
        let pts: Vec<Vec<i64>> = (0..npts)
            .map(|_| (0..d).map(|_| rng.random_range(lo..=hi)).collect())
            .collect();
        if let Ok(p) = P::new(pts) {
            if p.dim() == d {
                return p;
            }
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random full-dimensional 3-polytopes with small coordinates.
pub fn fuzz_3d(count: usize, seed: u64) -> Vec<P> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let npts = 4 + i % 5;
            let hi = 1 + (i % 3) as i64;
            random_polytope(&mut r, 3, npts, -1, hi)
        })
        .collect()
}

/// Random polytopes of dimensions 2 to 4.
pub fn fuzz_mixed(count: usize, seed: u64) -> Vec<P> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| match i % 3 {
            0 => random_polytope(&mut r, 2, 3 + i % 5, -2, 2),
            1 => random_polytope(&mut r, 3, 4 + i % 4, -1, 2),
            _ => random_polytope(&mut r, 4, 5 + i % 3, 0, 1),
        })
        .collect()
}

/// Random unimodular matrix as a product of elementary moves.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..3 * d {
        let (a, b) = (rng.random_range(0..d), rng.random_range(0..d));
        if a != b {
            let k = rng.random_range(-2..=2);
            let src = m[b].clone();
            for (x, y) in m[a].iter_mut().zip(&src) {
                *x += k * y;
            }
        }
        if rng.random_bool(0.3) {
            m.swap(a, b);
        }
    }
    m
}

/// Image of `P` under `x ↦ U x + t`.
pub fn transform(p: &P, u: &[Vec<i64>], t: &[i64]) -> P {
    let pts = p
        .vertices()
        .iter()
        .map(|v| {
            (0..v.len())
                .map(|i| u[i].iter().zip(v).map(|(a, b)| a * b).sum::<i64>() + t[i])
                .collect()
        })
        .collect();
    P::new(pts).unwrap()
}
