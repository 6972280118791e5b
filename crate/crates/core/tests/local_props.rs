mod common;

use common::*;
use ehrhart::counting::{interior_point_count, is_hollow};
use ehrhart::enumerate::{enumerate_simplices, EnumOptions};
use ehrhart::local::{decomposition_check, multiplicativity_check, refinement_monotonicity_check};
use ehrhart::{catalog, free_join, hstar, is_trivially_thin, local_hstar, Matrix64};
use proptest::prelude::*;

fn corpus() -> Vec<P> {
    let mut v: Vec<P> = named_corpus().into_iter().map(|(_, p)| p).collect();
    v.extend(named_5d().into_iter().map(|(_, p)| p));
    v.extend(fuzz_mixed(60, 5));
    v
}

#[test]
fn structural_laws_on_corpus() {
    for p in corpus() {
        let d = p.dim();
        let r = local_hstar(&p).unwrap();
        let l = &r.lstar;
        let ctx = format!("{:?}", p.vertices());
        if d == 0 {
            assert!(l.is_zero(), "{ctx}");
            continue;
        }
        assert!(l.is_palindromic(d + 1), "{ctx}");
        assert!(l.is_nonnegative(), "{ctx}");
        assert_eq!(l.coeff(0), 0, "{ctx}");
        assert_eq!(l.coeff(d + 1), 0, "{ctx}");
        assert_eq!(l.coeff(1), interior_point_count(&p), "{ctx}");
        let e = hstar(&p);
        if !l.is_zero() {
            assert!(l.subdegree().unwrap() >= e.codegree, "{ctx}");
            assert!(l.degree() <= e.degree, "{ctx}");
        }
        for i in 2..=d {
            assert!(l.coeff(1) <= l.coeff(i), "{ctx}");
        }
        assert!(l.le_coefficientwise(&e.hstar), "{ctx}");
        assert!(decomposition_check(&p).holds, "{ctx}");
    }
}

#[test]
fn thinness_and_hollowness() {
    for p in corpus().into_iter().filter(|p| p.dim() > 0) {
        let r = local_hstar(&p).unwrap();
        if r.is_thin {
            assert!(is_hollow(&p), "{:?}", p.vertices());
        }
        if p.dim() <= 2 {
            assert_eq!(r.is_thin, is_hollow(&p), "{:?}", p.vertices());
        }
        if is_trivially_thin(&p) {
            assert!(r.is_thin, "{:?}", p.vertices());
        }
    }
}

#[test]
fn local_hstar_examples() {
    let l = |p: &P| coeffs(&local_hstar(p).unwrap().lstar);
    assert_eq!(
        l(&free_join(
            &catalog::segment(-1, 1),
            &catalog::segment(-1, 1)
        )),
        vec![0, 0, 1]
    );
    assert_eq!(l(&catalog::reflexive_triangle()), vec![0, 1, 1]);
    assert_eq!(l(&catalog::centered_cube(3)), vec![0, 1, 17, 1]);
    assert_eq!(l(&catalog::segment(0, 3)), vec![0, 2]);
    assert!(l(&catalog::dilated_simplex(2, 2)).is_empty());
    assert_eq!(l(&catalog::cube(3)), vec![0, 0, 1]);
    assert!(l(&catalog::nonspanning_thin_simplex()).is_empty());
}

#[test]
fn cyclic_quotient_simplices_are_thin_exactly_when_pyramids() {
    for d in 2..=4 {
        for rec in enumerate_simplices::<i64>(d, 6, EnumOptions::default()).unwrap() {
            if rec.flags.cyclic_quotient {
                assert_eq!(rec.flags.thin, rec.flags.pyramid, "{:?}", rec.vertices);
            }
        }
    }
}

#[test]
fn free_joins_multiply() {
    let mut r = rng(41);
    let mut pairs: Vec<(P, P)> = vec![
        (catalog::segment(-1, 1), catalog::reflexive_triangle()),
        (catalog::segment(0, 2), catalog::dilated_simplex(2, 2)),
        (catalog::centered_cube(2), catalog::segment(-1, 1)),
        (poly(&[&[0, 0]]), catalog::reflexive_triangle()),
    ];
    while pairs.len() < 24 {
        let a = random_polytope(&mut r, 1 + pairs.len() % 2, 3, -1, 2);
        let b = random_polytope(&mut r, 1 + (pairs.len() / 2) % 2, 4, -1, 1);
        pairs.push((a, b));
    }
    for (a, b) in &pairs {
        let c = multiplicativity_check(a, b).unwrap();
        assert!(c.holds(), "{:?} * {:?}", a.vertices(), b.vertices());
    }
}

#[test]
fn coarsening_shrinks_local_hstar() {
    let bases: [&[&[i64]]; 4] = [
        &[&[2, 0], &[0, 1]],
        &[&[1, 0], &[1, 2]],
        &[&[1, 0], &[2, 3]],
        &[&[2, 0], &[1, 2]],
    ];
    let mut r = rng(13);
    for i in 0..24 {
        let b = Matrix64::from_i64(bases[i % 4]);
        let base = random_polytope(&mut r, 2, 3 + i % 4, -2, 2);
        let p = transform(&base, &b.to_rows(), &[0, 0]);
        assert!(
            refinement_monotonicity_check(&p, &b).unwrap(),
            "{:?}",
            p.vertices()
        );
        assert_eq!(
            local_hstar(&p.sublattice_view(&b).unwrap()).unwrap().lstar,
            local_hstar(&base).unwrap().lstar
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn local_hstar_is_invariant_under_unimodular_maps(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let d = 2 + (seed % 2) as usize;
        let p = random_polytope(&mut r, d, d + 2, -1, 2);
        let u = random_unimodular(&mut r, d);
        let q = transform(&p, &u, &vec![1; d]);
        prop_assert_eq!(local_hstar(&p).unwrap().lstar, local_hstar(&q).unwrap().lstar);
    }

    #[test]
    fn lattice_pyramids_are_thin(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let p = random_polytope(&mut r, 2 + (seed % 2) as usize, 5, -2, 2);
        prop_assert!(local_hstar(&ehrhart::lattice_pyramid(&p)).unwrap().is_thin);
    }
}
