use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use solvkit::exact::interval::RatInterval;
use solvkit::exact::{isolate_real_roots, spectral_profile, NumberField, NumberFieldElem, ZPoly};
use solvkit::IntMatrix;

fn unimodular(ops: &[(usize, usize, i64)], flip: bool) -> IntMatrix {
    let mut p = IntMatrix::identity(3);
    for &(i, j, c) in ops {
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(3);
        e.set(i, j, c.into());
        p = &e * &p;
    }
    if flip {
        let mut s = IntMatrix::identity(3);
        s.set(2, 2, (-1).into());
        p = &s * &p;
    }
    p
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

proptest! {
    #[test]
    fn root_moduli_multiply_to_one(
        ops in prop::collection::vec((0usize..3, 0usize..3, -2i64..=2), 0..6),
        flip: bool,
    ) {
        let a = unimodular(&ops, flip);
        let p = spectral_profile(&a).unwrap();
        prop_assert_eq!(p.root_count(), 3);
        prop_assert_eq!(p.modulus_product(), BigRational::one());
    }

    #[test]
    fn real_root_count_matches_construction(
        roots in prop::collection::vec(-5i64..=5, 1..4),
        c in 1i64..5,
    ) {
        // prod (x - r_i) * (x^2 + c)
        let mut p = ZPoly::from_i64s(&[c, 0, 1]);
        for &x in &roots {
            p = &p * &ZPoly::from_i64s(&[-x, 1]);
        }
        let mut distinct = roots.clone();
        distinct.sort();
        distinct.dedup();
        let iso = isolate_real_roots(&p).unwrap();
        prop_assert_eq!(iso.len(), distinct.len());
        for (root, &x) in iso.iter().zip(&distinct) {
            let half = BigRational::new(1.into(), 2.into());
            prop_assert!(root.interval.within(&(r(x) - &half), &(r(x) + &half)));
            let mult = roots.iter().filter(|&&y| y == x).count() as u32;
            prop_assert_eq!(root.multiplicity, mult);
        }
    }

    #[test]
    fn field_arithmetic_agrees_with_intervals(
        c in prop::collection::vec((-6i64..=6, 1i64..=4), 6),
    ) {
        // cubic field of x^3 - x^2 - 1 under its real embedding
        let f = NumberField::largest_real(&ZPoly::from_i64s(&[-1, 0, -1, 1])).unwrap();
        let q = |i: usize| BigRational::new(c[i].0.into(), c[i].1.into());
        let theta = f.generator();
        let k = |v: BigRational| NumberFieldElem::rational(v);
        let u = theta.clone() * theta.clone() * k(q(0)) + theta.clone() * k(q(1)) + k(q(2));
        let v = theta.clone() * k(q(3)) + k(q(4));
        let e = u.clone() * v.clone() - k(q(5)) * theta.clone();

        let width = BigRational::new(BigInt::one(), BigInt::one() << 64);
        let t = theta.enclosure(&width).unwrap();
        let pt = |x: BigRational| RatInterval::point(x);
        let ui = &(&(&(&t * &t) * &pt(q(0))) + &(&t * &pt(q(1)))) + &pt(q(2));
        let vi = &(&t * &pt(q(3))) + &pt(q(4));
        let ei = &(&ui * &vi) - &(&pt(q(5)) * &t);
        let exact = e.enclosure(&width).unwrap();
        // both enclose the same real number
        prop_assert!(exact.lo <= ei.hi && ei.lo <= exact.hi);
        prop_assert!(ei.width() < BigRational::new(BigInt::one(), BigInt::one() << 40));
    }
}
