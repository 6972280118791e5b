mod common;

use common::*;
use ehrhart::counting::{
    count_lattice_points, interior_point_count, lattice_points, simplex_hstar,
};
use ehrhart::local::refinement_monotonicity_check;
use ehrhart::{box_polynomial, catalog, hstar, local_hstar, newton_number};
use proptest::prelude::*;

fn corpus() -> Vec<P> {
    let mut v: Vec<P> = named_corpus()
        .into_iter()
        .map(|(_, p)| p)
        .filter(|p| p.dim() >= 1)
        .collect();
    v.extend(fuzz_mixed(45, 21));
    v
}

fn simplices() -> Vec<P> {
    let mut v: Vec<P> = corpus().into_iter().filter(|p| p.is_simplex()).collect();
    v.extend(named_5d().into_iter().map(|(_, p)| p));
    let mut r = rng(3);
    for d in 2..=4 {
        for _ in 0..10 {
            v.push(random_polytope(&mut r, d, d + 1, -2, 2));
        }
    }
    v
}

#[test]
fn hstar_matches_brute_force_dilate_counts() {
    for p in corpus() {
        let e = hstar(&p);
        assert_eq!(
            coeffs(&e.hstar),
            oracle_hstar(p.vertices()),
            "{:?}",
            p.vertices()
        );
        assert_eq!(e.hstar.coeff(0), 1);
        assert!(e.hstar.is_nonnegative());
        assert_eq!(e.degree + e.codegree, p.dim() + 1);
        assert_eq!(e.volume, e.hstar.at_one());
        assert_eq!(
            interior_point_count(&p),
            oracle_count(p.vertices(), 1, true)
        );
        assert_eq!(
            count_lattice_points(&p, &2, false),
            oracle_count(p.vertices(), 2, false)
        );
    }
}

#[test]
fn hstar_examples() {
    for d in 1..=5 {
        assert_eq!(
            coeffs(&hstar(&catalog::standard_simplex::<i64>(d)).hstar),
            vec![1]
        );
    }
    let e = hstar(&catalog::nonspanning_thin_simplex::<i64>());
    assert_eq!(coeffs(&e.hstar), vec![1, 3, 11, 1]);
    let e = hstar(&catalog::simplex_with_low_degree_local_hstar::<i64>());
    assert_eq!(coeffs(&e.hstar), vec![1, 1, 4, 5, 1]);
    assert!(lattice_points(&catalog::dilated_simplex::<i64>(2, 2), &1, true).is_empty());
}

#[test]
fn simplex_paths_agree_with_parallelepiped_oracle() {
    for s in simplices() {
        let (h, l) = oracle_simplex_polys(s.vertices());
        let b = box_polynomial(&s).unwrap();
        assert_eq!(
            coeffs(&simplex_hstar(&s).unwrap().hstar),
            h,
            "{:?}",
            s.vertices()
        );
        assert_eq!(coeffs(&b), l, "{:?}", s.vertices());
        assert_eq!(b, local_hstar(&s).unwrap().lstar);
        assert_eq!(b.at_one(), newton_number(&s));
    }
}

#[test]
fn newton_numbers() {
    assert_eq!(newton_number(&catalog::cube::<i64>(3)), -1);
    assert_eq!(newton_number(&catalog::cayley_tetrahedron::<i64>()), 1);
}

#[test]
fn refinement_of_doubled_segment() {
    let p = catalog::segment::<i64>(0, 2);
    let b = ehrhart::Matrix64::from_i64(&[&[2]]);
    let coarse = p.sublattice_view(&b).unwrap();
    assert!(local_hstar(&coarse).unwrap().lstar.is_zero());
    assert_eq!(coeffs(&local_hstar(&p).unwrap().lstar), vec![0, 1]);
    assert!(refinement_monotonicity_check(&p, &b).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn coarsening_the_lattice_lowers_hstar(
        diag in prop::collection::vec(1i64..=2, 3), below in prop::collection::vec(-1i64..=1, 3), seed in 0u64..500,
    ) {
        let b = ehrhart::Matrix64::from_i64(&[
            &[diag[0], 0, 0],
            &[below[0], diag[1], 0],
            &[below[1], below[2], diag[2]],
        ]);
        let base = random_polytope(&mut rng(seed), 3, 5, -1, 2);
        let p = transform(&base, &b.to_rows(), &[0, 0, 0]);
        let coarse = hstar(&p.sublattice_view(&b).unwrap()).hstar;
        prop_assert!(coarse.le_coefficientwise(&hstar(&p).hstar));
        prop_assert!(refinement_monotonicity_check(&p, &b).unwrap());
    }
}
