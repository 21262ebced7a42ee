//! Left-invariant geometry on Lie algebras: almost complex structures, the
//! Chevalley–Eilenberg complex, cohomology and symplectic checks.

pub mod acs;
pub mod cohomology;
pub mod forms;
pub mod kahler;

use std::sync::OnceLock;

use num_rational::BigRational;

pub use acs::{integrability_witness, is_integrable, nijenhuis, nijenhuis_vec, AlmostComplexStructure};
pub use cohomology::{CohomologyClass, CohomologyRing};
pub use forms::{CEComplex, ExteriorForm};
pub use kahler::{
    betti_numbers, betti_parity_check, geometry_report, hard_lefschetz, is_pseudo_kahler, is_symplectic,
    PseudoKahlerFailure,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("dimension {0} is odd or the matrix is not square")]
    OddDimension(usize),
    #[error("J^2 != -I")]
    NotAlmostComplex,
    #[error("dimension mismatch: algebra {algebra}, other {other}")]
    DimensionMismatch { algebra: usize, other: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("change of basis is singular")]
    Singular,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("form is not closed: {0}")]
    NotClosed(String),
    #[error("form is not symplectic")]
    NotSymplectic,
    #[error("invalid form: {0}")]
    Form(String),
    #[error("sign convention check failed: {0}")]
    Convention(String),
}

/// On `{X1, X2, Y1, Y2, Z, W}` with `[X1, Z] = X1`, the differential must give
/// `dα1 = γ ∧ α1`, i.e. `dα1(X1, Z) = -1`.
fn check_anchor() -> Result<(), String> {
    let g = crate::liealg::catalog::example5::<BigRational>().map_err(|e| e.to_string())?;
    let cx = forms::CEComplex::unanchored(&g).map_err(|e| e.to_string())?;
    let d_alpha1 = cx.d(&ExteriorForm::basis(0));
    let expected = ExteriorForm::basis(4).wedge(&ExteriorForm::basis(0));
    if d_alpha1 != expected {
        return Err(format!("d alpha1 = {d_alpha1}"));
    }
    if d_alpha1.eval_basis(&[0, 4]) != BigRational::from_integer((-1).into()) {
        return Err("d alpha1 (X1, Z) != -1".into());
    }
    Ok(())
}

pub(crate) fn convention_anchor() -> Result<(), GeomError> {
    static ANCHOR: OnceLock<Result<(), String>> = OnceLock::new();
    ANCHOR.get_or_init(check_anchor).clone().map_err(GeomError::Convention)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::exact::{MPoly, Matrix};
    use crate::liealg::catalog::{self, CatalogId};
    use crate::liealg::QLieAlgebra;
    use crate::scalar::int;

    fn q(v: i64) -> BigRational {
        int(v)
    }

    fn entry(id: CatalogId) -> catalog::CatalogEntry {
        catalog::catalog(&id).unwrap()
    }

    fn form(terms: &[(i64, &[usize])]) -> ExteriorForm {
        let t: Vec<(BigRational, Vec<usize>)> = terms
            .iter()
            .map(|(c, i)| (q(*c), i.iter().map(|k| k - 1).collect()))
            .collect();
        ExteriorForm::from_terms(terms[0].1.len(), &t).unwrap()
    }

    #[test]
    fn printed_surface_structures_are_integrable() {
        let e = entry(CatalogId::Hyperelliptic4);
        assert!(nijenhuis(&e.algebra, &e.j, 0, 3).unwrap().iter().all(Zero::is_zero));
        for id in CatalogId::standard_list() {
            let e = entry(id.clone());
            assert!(is_integrable(&e.algebra, &e.j).unwrap(), "{id}");
        }
    }

    #[test]
    fn spm_structures_vanish_identically_in_q() {
        let g = catalog::inoue_spm::<MPoly>().unwrap();
        for j in [
            catalog::inoue_spm_printed_j(MPoly::var(0)),
            catalog::inoue_spm_relabeled_j(MPoly::var(0)),
        ] {
            for a in 0..4 {
                for b in 0..4 {
                    let v = nijenhuis(&g, &j, a, b).unwrap();
                    assert!(v.iter().all(Zero::is_zero), "N(X{}, X{}) = {v:?}", a + 1, b + 1);
                }
            }
        }
    }

    #[test]
    fn transposed_spm_structure_is_not_integrable() {
        // reading the printed images as rows instead of columns
        let g = catalog::inoue_spm::<MPoly>().unwrap();
        let j = catalog::inoue_spm_printed_j(MPoly::var(0));
        let jt = AlmostComplexStructure::new(j.matrix().transpose()).unwrap();
        let (i, k, v) = integrability_witness(&g, &jt).unwrap().unwrap();
        assert_eq!((i, k), (1, 2));
        assert_eq!(v[2], MPoly::var(0).pow(2).scale(&q(-2)));
    }

    #[test]
    fn kodaira_with_other_pairing_is_not_integrable() {
        let g = entry(CatalogId::PrimaryKodaira4).algebra;
        let j = AlmostComplexStructure::from_pairs(4, &[(0, 2), (1, 3)]).unwrap();
        let (i, k, v) = integrability_witness(&g, &j).unwrap().unwrap();
        assert_eq!((i, k), (1, 2));
        assert_eq!(v, vec![q(0), q(0), q(1), q(0)]);
    }

    #[test]
    fn nijenhuis_is_antisymmetric() {
        for id in CatalogId::standard_list() {
            let e = entry(id);
            let j = AlmostComplexStructure::from_pairs(
                e.algebra.dim(),
                &(0..e.algebra.dim() / 2)
                    .map(|m| (m, e.algebra.dim() - 1 - m))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let n = e.algebra.dim();
            for a in 0..n {
                for b in 0..n {
                    let x = nijenhuis(&e.algebra, &j, a, b).unwrap();
                    let y = nijenhuis(&e.algebra, &j, b, a).unwrap();
                    assert!(x.iter().zip(&y).all(|(x, y)| (x.clone() + y.clone()).is_zero()));
                }
            }
        }
        let e = entry(CatalogId::Torus4);
        assert!(matches!(
            nijenhuis(&e.algebra, &e.j, 0, 4),
            Err(GeomError::IndexOutOfRange { .. })
        ));
    }

    fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<BigRational> {
        loop {
            let data = (0..n * n).map(|_| q(rng.gen_range(-3..=3))).collect();
            let m = Matrix::new(n, n, data).unwrap();
            if !m.det().unwrap().is_zero() {
                return m;
            }
        }
    }

    #[test]
    fn integrability_is_basis_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut ids = CatalogId::standard_list();
        ids.retain(|id| !matches!(id, CatalogId::Example4 { k, l, .. } if k + l > 3));
        for id in ids {
            let e = entry(id.clone());
            let n = e.algebra.dim();
            let bad = AlmostComplexStructure::from_pairs(
                n,
                &[(0, 2), (1, 3)]
                    .iter()
                    .copied()
                    .chain((2..n / 2).map(|m| (2 * m, 2 * m + 1)))
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            let expected_bad = is_integrable(&e.algebra, &bad).unwrap();
            for _ in 0..20 {
                let p = random_invertible(&mut rng, n);
                let g = e.algebra.change_basis(&p).unwrap();
                assert!(is_integrable(&g, &e.j.change_basis(&p).unwrap()).unwrap(), "{id}");
                assert_eq!(is_integrable(&g, &bad.change_basis(&p).unwrap()).unwrap(), expected_bad);
            }
        }
    }

    #[test]
    fn maurer_cartan_equations() {
        let g = entry(CatalogId::Example5).algebra;
        let cx = CEComplex::new(&g).unwrap();
        let e = ExteriorForm::basis;
        assert_eq!(cx.d(&e(0)), e(4).wedge(&e(0)));
        assert_eq!(cx.d(&e(1)), e(4).wedge(&e(1)).scale(&q(-1)));
        assert_eq!(cx.d(&e(2)), e(4).wedge(&e(2)));
        assert_eq!(cx.d(&e(3)), e(4).wedge(&e(3)).scale(&q(-1)));
        assert!(cx.d(&e(4)).is_zero() && cx.d(&e(5)).is_zero());
        assert_eq!(cx.d(&e(0)).eval_basis(&[0, 4]), q(-1));

        let pk = entry(CatalogId::PrimaryKodaira4).algebra;
        let cx = CEComplex::new(&pk).unwrap();
        assert_eq!(cx.d(&e(2)), e(0).wedge(&e(1)));
        assert!([0, 1, 3].iter().all(|&i| cx.d(&e(i)).is_zero()));

        let t = CEComplex::new(&entry(CatalogId::Torus4).algebra).unwrap();
        assert!((0..4).all(|k| t.differential(k).is_zero()));
    }

    #[test]
    fn d_squared_vanishes_on_catalog() {
        for id in CatalogId::standard_list() {
            assert!(CEComplex::new(&entry(id).algebra).unwrap().d_squared_vanishes());
        }
    }

    #[test]
    fn betti_numbers_and_duality() {
        assert_eq!(
            betti_numbers(&entry(CatalogId::Torus4).algebra).unwrap(),
            vec![1, 4, 6, 4, 1]
        );
        assert_eq!(betti_numbers(&entry(CatalogId::Hyperelliptic4).algebra).unwrap()[1], 2);
        let ring = CohomologyRing::new(&entry(CatalogId::Example5).algebra).unwrap();
        assert_eq!(ring.betti()[1], 2);
        assert!(ring.poincare_duality());
        assert_eq!(ring.euler_characteristic(), 0);
        for id in CatalogId::standard_list() {
            let ring = CohomologyRing::new(&entry(id.clone()).algebra).unwrap();
            assert_eq!(ring.betti()[0], 1);
            assert!(ring.poincare_duality(), "{id}");
            assert_eq!(ring.euler_characteristic(), 0, "{id}");
            if let Some(b1) = id.surface_b1() {
                assert_eq!(ring.betti()[1], b1, "{id}");
            }
        }
    }

    #[test]
    fn cup_products() {
        let ring = CohomologyRing::new(&entry(CatalogId::Example5).algebra).unwrap();
        let gamma = ring.class_of(&ExteriorForm::basis(4)).unwrap();
        let eta = ring.class_of(&ExteriorForm::basis(5)).unwrap();
        assert!(!ring.cup(&gamma, &eta).is_zero());
        assert!(matches!(
            ring.class_of(&ExteriorForm::basis(0)),
            Err(GeomError::NotClosed(_))
        ));

        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let random_class = |rng: &mut ChaCha8Rng, k: usize| CohomologyClass {
            degree: k,
            coords: (0..ring.betti()[k]).map(|_| q(rng.gen_range(-2..=2))).collect(),
        };
        for _ in 0..20 {
            let (a, b) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
            let (x, y) = (random_class(&mut rng, a), random_class(&mut rng, b));
            let xy = ring.cup(&x, &y);
            let yx = ring.cup(&y, &x);
            let sign = if (a * b) % 2 == 1 { q(-1) } else { q(1) };
            let yx: Vec<BigRational> = yx.coords.iter().map(|c| c * &sign).collect();
            assert_eq!(xy.coords, yx);

            // shifting a representative by a coboundary changes nothing
            if a > 0 && !ring.representatives(a).is_empty() {
                let cx = ring.complex();
                let beta = cx.from_coords(
                    a - 1,
                    &(0..cx.basis(a - 1).len())
                        .map(|_| q(rng.gen_range(-2..=2)))
                        .collect::<Vec<_>>(),
                );
                let shifted = ring.representative(&x).add(&cx.d(&beta));
                let w = shifted.wedge(&ring.representative(&y));
                let c = if a + b <= 6 {
                    ring.class_of(&w).unwrap().coords
                } else {
                    Vec::new()
                };
                assert_eq!(c, xy.coords);
            }
        }
    }

    #[test]
    fn symplectic_forms() {
        let ex5 = entry(CatalogId::Example5);
        let omega = ex5.omega.clone().unwrap();
        assert!(is_symplectic(&ex5.algebra, &omega).unwrap());
        assert!(!omega.pow(3).is_zero());
        let pk = entry(CatalogId::PrimaryKodaira4).algebra;
        assert!(is_symplectic(&pk, &form(&[(1, &[1, 3]), (1, &[2, 4])])).unwrap());
        assert!(!is_symplectic(&pk, &form(&[(1, &[1, 2])])).unwrap());
        let odd = QLieAlgebra::abelian(3);
        assert!(matches!(
            is_symplectic(&odd, &form(&[(1, &[1, 2])])),
            Err(GeomError::OddDimension(3))
        ));
    }

    #[test]
    fn pseudo_kahler_checks() {
        let ex5 = entry(CatalogId::Example5);
        let omega = ex5.omega.clone().unwrap();
        assert_eq!(is_pseudo_kahler(&ex5.algebra, &omega, ex5.j.matrix()).unwrap(), Ok(()));
        let mut flipped = ex5.j.matrix().clone();
        flipped.set(4, 5, q(1));
        assert_eq!(
            is_pseudo_kahler(&ex5.algebra, &omega, &flipped).unwrap(),
            Err(PseudoKahlerFailure::NotAlmostComplex)
        );
        let h = entry(CatalogId::Hyperelliptic4);
        let w = form(&[(1, &[1, 2]), (1, &[3, 4])]);
        assert_eq!(is_pseudo_kahler(&h.algebra, &w, h.j.matrix()).unwrap(), Ok(()));
        let w = form(&[(1, &[1, 3]), (1, &[2, 4])]);
        assert_eq!(
            is_pseudo_kahler(&h.algebra, &w, h.j.matrix()).unwrap(),
            Err(PseudoKahlerFailure::NotClosed)
        );
    }

    #[test]
    fn lefschetz_and_parity() {
        let ex5 = entry(CatalogId::Example5);
        let omega = ex5.omega.clone().unwrap();
        assert_eq!(hard_lefschetz(&ex5.algebra, &omega).unwrap(), vec![true, true, true]);
        assert!(betti_parity_check(&ex5.algebra).unwrap());

        let pk = entry(CatalogId::PrimaryKodaira4).algebra;
        let w = form(&[(1, &[1, 3]), (1, &[2, 4])]);
        assert!(!hard_lefschetz(&pk, &w).unwrap()[0]);
        assert!(!betti_parity_check(&pk).unwrap());

        let t = entry(CatalogId::Torus4).algebra;
        let w = form(&[(1, &[1, 2]), (1, &[3, 4])]);
        assert_eq!(hard_lefschetz(&t, &w).unwrap(), vec![true, true]);
        assert!(betti_parity_check(&t).unwrap());
        assert!(matches!(
            hard_lefschetz(&t, &form(&[(1, &[1, 2])])),
            Err(GeomError::NotSymplectic)
        ));
    }

    #[test]
    fn report_shape() {
        let ex5 = entry(CatalogId::Example5);
        let r = geometry_report(&ex5.algebra, ex5.omega.as_ref(), Some(ex5.j.matrix())).unwrap();
        assert_eq!(r["de_rham_valid"], true);
        assert_eq!(r["pseudo_kahler"]["holds"], true);
        assert_eq!(r["hard_lefschetz"], serde_json::json!([true, true, true]));
        let h = entry(CatalogId::Hyperelliptic4);
        let r = geometry_report(&h.algebra, None, None).unwrap();
        assert_eq!(r["de_rham_valid"], false);
        assert_eq!(r["betti"][1], 2);
    }

    #[test]
    fn form_json_round_trip() {
        let w = form(&[(1, &[1, 2]), (-3, &[2, 4])]);
        assert_eq!(ExteriorForm::from_json(&w.to_json()).unwrap(), w);
        assert_eq!(w.to_string(), "e1^e2 - 3*e2^e4");
        assert_eq!(
            ExteriorForm::monomial(q(1), &[2, 1]),
            ExteriorForm::monomial(q(-1), &[1, 2])
        );
        assert!(ExteriorForm::monomial(q(1), &[1, 1]).is_zero());
    }
}
