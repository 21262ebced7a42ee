use num_rational::BigRational;
use proptest::prelude::*;
use solvkit::classify::Eta;
use solvkit::geom::{
    hard_lefschetz, integrability_witness, is_integrable, is_pseudo_kahler, is_symplectic, nijenhuis_vec,
    AlmostComplexStructure, CEComplex, CohomologyRing, ExteriorForm,
};
use solvkit::liealg::catalog::{inoue_spm_relabeled_j, primary_kodaira4};
use solvkit::liealg::{catalog, is_completely_solvable, CatalogId};
use solvkit::QMatrix;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn two_form(pairs: &[(usize, usize)]) -> ExteriorForm {
    let terms: Vec<_> = pairs.iter().map(|&(a, b)| (q(1), vec![a, b])).collect();
    ExteriorForm::from_terms(2, &terms).unwrap()
}

#[test]
fn catalog_structure() {
    for id in CatalogId::standard_list() {
        let e = catalog(&id).unwrap();
        let g = &e.algebra;
        assert!(g.jacobi_check().is_ok(), "{id}");
        assert!(g.is_unimodular(), "{id}");
        assert!(CEComplex::new(g).unwrap().d_squared_vanishes(), "{id}");
        if !matches!(id, CatalogId::InoueSpm4 { .. }) {
            assert!(is_integrable(g, &e.j).unwrap(), "{id}");
        }
    }
}

#[test]
fn cohomology_duality_on_surface_algebras() {
    for id in CatalogId::standard_list() {
        let ring = CohomologyRing::new(&catalog(&id).unwrap().algebra).unwrap();
        assert!(ring.poincare_duality(), "{id}");
        assert_eq!(ring.euler_characteristic(), 0, "{id}");
        if let Some(b1) = id.surface_b1() {
            assert_eq!(ring.betti()[1], b1, "{id}");
        }
    }
}

#[test]
fn largest_rigid_algebra_has_dual_betti_numbers() {
    let id = CatalogId::Example4 {
        k: 3,
        l: 3,
        angles: Vec::new(),
    };
    let ring = CohomologyRing::new(&catalog(&id).unwrap().algebra).unwrap();
    assert_eq!(ring.betti().len(), 13);
    assert!(ring.poincare_duality());
    assert_eq!(ring.euler_characteristic(), 0);
}

#[test]
fn angle_tags_keep_integrability() {
    let id = CatalogId::Example4 {
        k: 1,
        l: 2,
        angles: vec![Eta::PiOverTwo, Eta::TwoPiOverThree],
    };
    let e = catalog(&id).unwrap();
    assert!(is_integrable(&e.algebra, &e.j).unwrap());
    assert!(e.algebra.is_unimodular());
}

#[test]
fn example5_suite() {
    let e = catalog(&CatalogId::Example5).unwrap();
    let (g, omega) = (&e.algebra, e.omega.as_ref().unwrap());
    let cx = CEComplex::new(g).unwrap();
    assert!(cx.d(omega).is_zero());
    assert!(!omega.pow(3).is_zero());
    assert!(is_symplectic(g, omega).unwrap());
    assert_eq!(is_pseudo_kahler(g, omega, e.j.matrix()).unwrap(), Ok(()));
    assert_eq!(hard_lefschetz(g, omega).unwrap(), vec![true, true, true]);
    let ring = CohomologyRing::new(g).unwrap();
    assert!(ring.betti_parity() && ring.poincare_duality());
    assert_eq!(ring.euler_characteristic(), 0);
    assert_eq!(is_completely_solvable(g).unwrap().holds(), Some(true));
}

#[test]
fn kodaira_negative_control() {
    let g = primary_kodaira4::<BigRational>().unwrap();
    let omega = two_form(&[(0, 2), (1, 3)]);
    assert!(is_symplectic(&g, &omega).unwrap());
    let ring = CohomologyRing::new(&g).unwrap();
    assert_eq!(ring.betti()[1], 3);
    assert!(!ring.betti_parity());
    assert!(!hard_lefschetz(&g, &omega).unwrap()[0]);
}

#[test]
fn spm_structures() {
    let e = catalog(&CatalogId::InoueSpm4 { q: q(2) }).unwrap();
    let printed = integrability_witness(&e.algebra, &e.j).unwrap();
    let relabeled = is_integrable(&e.algebra, &inoue_spm_relabeled_j(q(2))).unwrap();
    // both structures are integrable on these brackets
    assert_eq!(printed, None);
    assert!(relabeled);
    // the transposed matrix is not
    let jt = AlmostComplexStructure::new(e.j.matrix().transpose()).unwrap();
    let (i, j, v) = integrability_witness(&e.algebra, &jt).unwrap().unwrap();
    assert_eq!((i, j), (1, 2));
    assert_eq!(v[2], q(-8));
}

fn random_invertible(entries: &[i64]) -> Option<QMatrix> {
    let p = QMatrix::new(4, 4, entries.iter().map(|&x| q(x)).collect()).unwrap();
    p.inverse().ok().map(|_| p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn nijenhuis_is_antisymmetric(entries in prop::collection::vec(-3i64..=3, 16), idx in 0usize..6) {
        let Some(p) = random_invertible(&entries) else { return Ok(()) };
        let ids = CatalogId::standard_list();
        let e = catalog(&ids[idx]).unwrap();
        let j = AlmostComplexStructure::standard(4).unwrap().change_basis(&p).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let x = e.algebra.basis_vector(a);
                let y = e.algebra.basis_vector(b);
                let nxy = nijenhuis_vec(&e.algebra, &j, &x, &y);
                let nyx = nijenhuis_vec(&e.algebra, &j, &y, &x);
                prop_assert!(nxy.iter().zip(&nyx).all(|(u, v)| u == &-v.clone()));
            }
        }
    }

    #[test]
    fn integrability_is_basis_independent(entries in prop::collection::vec(-3i64..=3, 16), idx in 0usize..6) {
        let Some(p) = random_invertible(&entries) else { return Ok(()) };
        let e = catalog(&CatalogId::standard_list()[idx]).unwrap();
        let g2 = e.algebra.change_basis(&p).unwrap();
        let j2 = e.j.change_basis(&p).unwrap();
        prop_assert_eq!(is_integrable(&e.algebra, &e.j).unwrap(), is_integrable(&g2, &j2).unwrap());
    }
}
