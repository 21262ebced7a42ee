use num_traits::ToPrimitive;
use proptest::prelude::*;
use solvkit::wang::{abelianization_rank, commutator, lambda_matrix_generators, power_reduction, WangExtension};
use solvkit::IntMatrix;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows)
}

fn conjugator(n: usize, ops: &[(usize, usize, i64)]) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i != j {
            let mut e = IntMatrix::identity(n);
            e.set(i, j, c.into());
            p = &e * &p;
        }
    }
    let det = p.det().unwrap().to_i64().unwrap();
    let inv = p.adjugate().unwrap().scale(&det.into());
    (p, inv)
}

fn monodromies() -> Vec<IntMatrix> {
    vec![
        IntMatrix::identity(3),
        m(&[&[0, 1, 0], &[-1, -1, 0], &[1, 0, 1]]),
        m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
        m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 1]]),
        m(&[&[2, 1, 0], &[1, 1, 0], &[0, 0, 1]]),
        m(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]]),
    ]
}

#[test]
fn lambda_relations_hold() {
    for n in 1..=10 {
        let [g1, g2, g3] = lambda_matrix_generators(n).unwrap();
        assert_eq!(commutator(&g1, &g2), g3.pow(n as u32));
        assert_eq!(&g1 * &g3, &g3 * &g1);
        assert_eq!(&g2 * &g3, &g3 * &g2);
    }
    assert!(lambda_matrix_generators(0).is_err());
}

#[test]
fn heisenberg_constructor_enforces_det() {
    let b = m(&[&[2, 1], &[1, 1]]);
    assert!(WangExtension::heisenberg(1, b.clone(), 1, None).is_ok());
    assert!(WangExtension::heisenberg(1, b, -1, None).is_err());
    let flip = m(&[&[0, 1], &[1, 0]]);
    assert!(WangExtension::heisenberg(2, flip.clone(), -1, None).is_ok());
    assert!(WangExtension::heisenberg(2, flip, 1, None).is_err());
}

proptest! {
    #[test]
    fn abelianization_is_conjugation_invariant(
        idx in 0usize..6,
        ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 1..6),
    ) {
        let a = &monodromies()[idx];
        let (p, pinv) = conjugator(3, &ops);
        let b = &(&p * a) * &pinv;
        let r0 = abelianization_rank(&WangExtension::abelian(a.clone()).unwrap());
        let r1 = abelianization_rank(&WangExtension::abelian(b).unwrap());
        prop_assert_eq!(r0, r1);
    }

    #[test]
    fn heisenberg_abelianization_is_conjugation_invariant(
        ops in prop::collection::vec((0usize..2, 0usize..2, -3i64..=3), 1..6),
        n in 1u32..5,
    ) {
        for b in [m(&[&[-1, 0], &[0, -1]]), m(&[&[2, 1], &[1, 1]]), m(&[&[0, 1], &[-1, 0]])] {
            let (p, pinv) = conjugator(2, &ops);
            let c = &(&p * &b) * &pinv;
            let w0 = WangExtension::heisenberg(n, b.clone(), 1, None).unwrap();
            let w1 = WangExtension::heisenberg(n, c, 1, None).unwrap();
            prop_assert_eq!(abelianization_rank(&w0), abelianization_rank(&w1));
        }
    }

    #[test]
    fn power_reduction_never_lowers_b1(idx in 0usize..6, k in 1i64..7) {
        let w = WangExtension::abelian(monodromies()[idx].clone()).unwrap();
        let p = power_reduction(&w, k).unwrap();
        prop_assert!(abelianization_rank(&p) >= abelianization_rank(&w));
    }
}
