use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::interval::RatInterval;
use super::numfield::{NumberField, NumberFieldElem};
use super::roots::{isolate_real_roots, RootInterval};
use super::{factor_over_integers, ExactError, FactoredPoly, Matrix, ZPoly};
use crate::rational_string;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RootSign {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealRootInfo {
    pub interval: RootInterval,
    pub multiplicity: u32,
    pub sign: RootSign,
    pub equals_one: bool,
    pub equals_minus_one: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModulusSquared {
    Rational(BigRational),
    /// Exact value in the field of the real root, with a certified enclosure.
    Algebraic {
        value: NumberFieldElem,
        enclosure: RatInterval,
    },
}

impl Serialize for ModulusSquared {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ModulusSquared::Rational(r) => rational_string(r).serialize(s),
            ModulusSquared::Algebraic { enclosure, .. } => {
                [rational_string(&enclosure.lo), rational_string(&enclosure.hi)].serialize(s)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexPair {
    pub modulus_squared: ModulusSquared,
    pub multiplicity: u32,
    pub on_unit_circle: bool,
    pub root_of_unity_order: Option<u32>,
}

/// Exact spectral data of a unimodular integer matrix of size 2 or 3.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralProfile {
    pub degree: usize,
    #[serde(serialize_with = "ser_display")]
    pub char_poly: ZPoly,
    pub factored: FactoredPoly,
    #[serde(serialize_with = "ser_display")]
    pub det: BigInt,
    pub real_roots: Vec<RealRootInfo>,
    pub complex_pairs: Vec<ComplexPair>,
    pub eigenspace_rank_at_1: usize,
    pub eigenspace_rank_at_minus_1: usize,
    pub is_identity: bool,
    pub is_unipotent: bool,
    pub unipotency_index: Option<u32>,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Kronecker's criterion for `x^2 - t x + d`: when `d = 1` and `|t| <= 2` the
/// roots are roots of unity of order 1, 6, 4, 3, 2 for `t = 2, 1, 0, -1, -2`.
pub fn quadratic_unit_circle(t: i64, d: i64) -> Option<u32> {
    if d != 1 {
        return None;
    }
    match t {
        2 => Some(1),
        1 => Some(6),
        0 => Some(4),
        -1 => Some(3),
        -2 => Some(2),
        _ => None,
    }
}

fn bigint_i64(v: &BigInt) -> Option<i64> {
    use num_traits::ToPrimitive;
    v.to_i64()
}

pub fn spectral_profile(m: &Matrix<BigInt>) -> Result<SpectralProfile, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if !(2..=3).contains(&n) {
        return Err(ExactError::DimensionUnsupported(n));
    }
    let det = m.det()?;
    if !det.abs().is_one() {
        return Err(ExactError::NotUnimodular(det.to_string()));
    }
    let cp = m.char_poly()?;
    let factored = factor_over_integers(&cp)?;

    let mut real_roots = Vec::new();
    for r in isolate_real_roots(&cp)? {
        let one = BigRational::one();
        let is_pos = matches!(r.interval.sign(), Some(Ordering::Greater));
        real_roots.push(RealRootInfo {
            equals_one: r.interval.is_exact() && r.interval.lo == one,
            equals_minus_one: r.interval.is_exact() && r.interval.lo == -one,
            sign: if is_pos { RootSign::Positive } else { RootSign::Negative },
            interval: r.interval,
            multiplicity: r.multiplicity,
        });
    }

    let mut complex_pairs = Vec::new();
    for (f, mult) in &factored.factors {
        match f.degree() {
            Some(2) => {
                let (d, b) = (f.coeff(0), f.coeff(1));
                if &b * &b - BigInt::from(4) * &d >= BigInt::zero() {
                    continue;
                }
                let order = match (bigint_i64(&(-&b)), bigint_i64(&d)) {
                    (Some(t), Some(d)) => quadratic_unit_circle(t, d),
                    _ => None,
                };
                complex_pairs.push(ComplexPair {
                    on_unit_circle: d.is_one(),
                    modulus_squared: ModulusSquared::Rational(BigRational::from_integer(d)),
                    multiplicity: *mult,
                    root_of_unity_order: order,
                });
            }
            Some(3) => {
                let roots = isolate_real_roots(f)?;
                if roots.len() != 1 {
                    continue;
                }
                // product of the three roots is -f(0) = c |alpha|^2
                let k = NumberField::real(f, 0)?;
                let c = k.generator();
                let prod = NumberFieldElem::rational(BigRational::from_integer(-f.coeff(0)));
                let value = prod.try_div(&c)?;
                let enclosure = value.enclosure(&BigRational::new(1.into(), BigInt::from(1u64 << 32)))?;
                complex_pairs.push(ComplexPair {
                    on_unit_circle: value == NumberFieldElem::one(),
                    modulus_squared: ModulusSquared::Algebraic { value, enclosure },
                    multiplicity: *mult,
                    root_of_unity_order: None,
                });
            }
            _ => {}
        }
    }

    let q = m.to_rational();
    let id = Matrix::<BigRational>::identity(n);
    let eig1 = n - (&q - &id).rank();
    let eigm1 = n - (&q + &id).rank();
    let is_unipotent = cp == ZPoly::from_i64s(&[-1, 1]).pow(n as u32);
    let unipotency_index = if is_unipotent {
        let nil = &q - &id;
        (1..=n as u32).find(|&k| nil.pow(k).is_zero())
    } else {
        None
    };

    Ok(SpectralProfile {
        degree: n,
        char_poly: cp,
        factored,
        det,
        real_roots,
        complex_pairs,
        eigenspace_rank_at_1: eig1,
        eigenspace_rank_at_minus_1: eigm1,
        is_identity: m.is_identity(),
        is_unipotent,
        unipotency_index,
    })
}

impl SpectralProfile {
    pub fn root_count(&self) -> usize {
        let real: u32 = self.real_roots.iter().map(|r| r.multiplicity).sum();
        let pairs: u32 = self.complex_pairs.iter().map(|p| 2 * p.multiplicity).sum();
        (real + pairs) as usize
    }

    /// Product of all root moduli with multiplicity, from the constant terms
    /// of the irreducible factors.
    pub fn modulus_product(&self) -> BigRational {
        self.factored.factors.iter().fold(BigRational::one(), |acc, (f, m)| {
            let c = BigRational::from_integer(f.coeff(0).abs()) / BigRational::from_integer(f.leading().abs());
            acc * num_traits::pow(c, *m as usize)
        })
    }

    pub fn multiplicity_of_one(&self) -> u32 {
        self.real_roots
            .iter()
            .find(|r| r.equals_one)
            .map_or(0, |r| r.multiplicity)
    }

    pub fn multiplicity_of_minus_one(&self) -> u32 {
        self.real_roots
            .iter()
            .find(|r| r.equals_minus_one)
            .map_or(0, |r| r.multiplicity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_profile() {
        let p = spectral_profile(&Matrix::identity(3)).unwrap();
        assert!(p.is_identity && p.is_unipotent);
        assert_eq!(p.eigenspace_rank_at_1, 3);
        assert_eq!(p.real_roots.len(), 1);
        assert_eq!(p.real_roots[0].multiplicity, 3);
        assert_eq!(p.unipotency_index, Some(1));
    }

    #[test]
    fn order_three_rotation() {
        let m = Matrix::from_i64_rows(&[&[0, 1], &[-1, -1]]);
        let p = spectral_profile(&m).unwrap();
        assert_eq!(p.complex_pairs.len(), 1);
        assert!(p.complex_pairs[0].on_unit_circle);
        assert_eq!(p.complex_pairs[0].root_of_unity_order, Some(3));
    }

    #[test]
    fn inoue_cubic_pair_inside_unit_circle() {
        let m = Matrix::companion(&ZPoly::from_i64s(&[-1, 0, -1, 1])).unwrap();
        let p = spectral_profile(&m).unwrap();
        assert_eq!(p.real_roots.len(), 1);
        let r = &p.real_roots[0].interval;
        assert!(r.within(&BigRational::one(), &BigRational::from_integer(2.into())));
        let pair = &p.complex_pairs[0];
        assert!(!pair.on_unit_circle);
        let ModulusSquared::Algebraic { value, enclosure } = &pair.modulus_squared else {
            panic!("cubic pair has an algebraic modulus");
        };
        assert_eq!(enclosure.cmp_rational(&BigRational::one()), Some(Ordering::Less));
        // |alpha|^2 c = det = 1
        let c = value.field().unwrap().generator();
        assert_eq!(value.clone() * c, NumberFieldElem::one());
        assert_eq!(p.root_count(), 3);
    }

    #[test]
    fn unipotency_index_and_errors() {
        let m = Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let p = spectral_profile(&m).unwrap();
        assert_eq!(p.unipotency_index, Some(3));
        assert_eq!(p.eigenspace_rank_at_1, 1);
        let bad = Matrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert!(matches!(spectral_profile(&bad), Err(ExactError::NotUnimodular(_))));
        assert!(matches!(
            spectral_profile(&Matrix::identity(4)),
            Err(ExactError::DimensionUnsupported(4))
        ));
    }

    #[test]
    fn kronecker_table() {
        let expected = [(2, 1), (1, 6), (0, 4), (-1, 3), (-2, 2)];
        for (t, order) in expected {
            assert_eq!(quadratic_unit_circle(t, 1), Some(order));
        }
        assert_eq!(quadratic_unit_circle(3, 1), None);
        assert_eq!(quadratic_unit_circle(0, -1), None);
    }
}
