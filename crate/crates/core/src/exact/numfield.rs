//! Arithmetic in `Q[x]/(p)` for an irreducible integer polynomial `p`.
//!
//! A [`NumberField`] pairs the defining polynomial with a chosen embedding:
//! a real root pinned by an isolating interval, or the complex root in the
//! upper half-plane. Equality and arithmetic only depend on the polynomial,
//! so the same abstract element can be read through either embedding with
//! [`NumberFieldElem::reembed`]. Sign queries refine the isolating interval
//! until the enclosure of the element excludes zero; this always terminates
//! for nonzero elements because the defining polynomial is irreducible.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};
use serde::Serialize;

use super::factor::factor_over_integers;
use super::interval::RatInterval;
use super::roots::{isolate_real_roots, refine, RootInterval};
use super::{ExactError, Matrix, QPoly, ZPoly};
use crate::rational_string;
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Embedding {
    Real(RootInterval),
    ComplexUpper,
}

#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    min_poly: ZPoly,
    modulus: QPoly,
    embedding: Embedding,
}

impl NumberField {
    /// Validates that `min_poly` is irreducible of degree 1 to 4.
    pub fn new(min_poly: &ZPoly, embedding: Embedding) -> Result<Arc<Self>, ExactError> {
        let f = factor_over_integers(min_poly)?;
        if !f.is_irreducible() || f.factors[0].0.degree() == Some(0) {
            return Err(ExactError::Reducible(format!("{min_poly} is not irreducible")));
        }
        let min_poly = f.factors[0].0.clone();
        let modulus = min_poly.to_rational().monic();
        Ok(Arc::new(NumberField {
            min_poly,
            modulus,
            embedding,
        }))
    }

    /// Field generated by the `index`-th real root (ascending).
    pub fn real(min_poly: &ZPoly, index: usize) -> Result<Arc<Self>, ExactError> {
        let roots = isolate_real_roots(min_poly)?;
        let root = roots.get(index).ok_or(ExactError::NotReal)?;
        NumberField::new(min_poly, Embedding::Real(root.interval.clone()))
    }

    pub fn largest_real(min_poly: &ZPoly) -> Result<Arc<Self>, ExactError> {
        let n = isolate_real_roots(min_poly)?.len();
        if n == 0 {
            return Err(ExactError::NotReal);
        }
        NumberField::real(min_poly, n - 1)
    }

    /// Field generated by the root with positive imaginary part; the
    /// polynomial must have exactly one such root.
    pub fn complex(min_poly: &ZPoly) -> Result<Arc<Self>, ExactError> {
        let deg = min_poly.degree().unwrap_or(0);
        let real = isolate_real_roots(min_poly)?.len();
        if deg - real != 2 {
            return Err(ExactError::Reducible(format!(
                "{min_poly} does not have exactly one conjugate pair"
            )));
        }
        NumberField::new(min_poly, Embedding::ComplexUpper)
    }

    pub fn min_poly(&self) -> &ZPoly {
        &self.min_poly
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }

    pub fn embedding(&self) -> &Embedding {
        &self.embedding
    }

    pub fn is_real(&self) -> bool {
        matches!(self.embedding, Embedding::Real(_))
    }

    fn same_field(&self, other: &NumberField) -> bool {
        self.modulus == other.modulus
    }

    pub fn generator(self: &Arc<Self>) -> NumberFieldElem {
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn element(self: &Arc<Self>, coords: Vec<BigRational>) -> NumberFieldElem {
        NumberFieldElem {
            field: Some(self.clone()),
            coords: QPoly::new(coords).rem(&self.modulus),
        }
    }

    pub fn from_poly(self: &Arc<Self>, p: &QPoly) -> NumberFieldElem {
        NumberFieldElem {
            field: Some(self.clone()),
            coords: p.rem(&self.modulus),
        }
    }

    /// Floating-point approximation of the embedded generator, for display.
    pub fn approx_generator(&self) -> (f64, f64) {
        match &self.embedding {
            Embedding::Real(iv) => {
                let r = refine(&self.modulus, iv, &BigRational::new(1.into(), (1u64 << 60).into()));
                (to_f64(&r.midpoint()), 0.0)
            }
            Embedding::ComplexUpper => approx_upper_root(&self.modulus),
        }
    }
}

pub(crate) fn to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Durand-Kerner iteration; display only, never used in a decision.
fn approx_upper_root(p: &QPoly) -> (f64, f64) {
    let c: Vec<f64> = p.monic().coeffs().iter().map(to_f64).collect();
    let n = c.len() - 1;
    let eval = |re: f64, im: f64| {
        let (mut a, mut b) = (0.0, 0.0);
        for k in (0..=n).rev() {
            let (na, nb) = (a * re - b * im + c[k], a * im + b * re);
            a = na;
            b = nb;
        }
        (a, b)
    };
    let mut z: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let t = 0.4 + 0.9 * k as f64;
            (t.cos() * 0.9f64.powi(k as i32 + 1), t.sin() * 0.9f64.powi(k as i32 + 1))
        })
        .collect();
    for _ in 0..500 {
        for i in 0..n {
            let (num_re, num_im) = eval(z[i].0, z[i].1);
            let (mut den_re, mut den_im) = (1.0, 0.0);
            for j in 0..n {
                if i != j {
                    let (dr, di) = (z[i].0 - z[j].0, z[i].1 - z[j].1);
                    let (nr, ni) = (den_re * dr - den_im * di, den_re * di + den_im * dr);
                    den_re = nr;
                    den_im = ni;
                }
            }
            let m = den_re * den_re + den_im * den_im;
            if m == 0.0 {
                continue;
            }
            let q_re = (num_re * den_re + num_im * den_im) / m;
            let q_im = (num_im * den_re - num_re * den_im) / m;
            z[i] = (z[i].0 - q_re, z[i].1 - q_im);
        }
    }
    z.into_iter()
        .filter(|(_, im)| *im > 0.0)
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap_or((f64::NAN, f64::NAN))
}

/// Element of a number field, or a bare rational when `field` is `None`.
///
/// Bare rationals make `Zero` and `One` context-free and combine with any
/// field. Mixing elements of two different fields through the operator
/// traits panics; the `try_*` methods report [`ExactError::IncompatibleFields`].
#[derive(Clone, Debug)]
pub struct NumberFieldElem {
    field: Option<Arc<NumberField>>,
    coords: QPoly,
}

impl NumberFieldElem {
    pub fn rational(c: BigRational) -> Self {
        NumberFieldElem {
            field: None,
            coords: QPoly::constant(c),
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Coordinates in the power basis `1, θ, θ², ...`, padded to the degree.
    pub fn coords(&self) -> Vec<BigRational> {
        let n = self.field.as_ref().map_or(1, |f| f.degree());
        (0..n.max(self.coords.coeffs().len()))
            .map(|i| self.coords.coeff(i))
            .collect()
    }

    pub fn as_poly(&self) -> &QPoly {
        &self.coords
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coords.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.coords.coeff(0)),
            _ => None,
        }
    }

    /// The same abstract element read through another embedding of its field.
    pub fn reembed(&self, field: &Arc<NumberField>) -> Result<Self, ExactError> {
        if let Some(f) = &self.field {
            if !f.same_field(field) {
                return Err(ExactError::IncompatibleFields);
            }
        }
        Ok(NumberFieldElem {
            field: Some(field.clone()),
            coords: self.coords.clone(),
        })
    }

    fn join(&self, other: &Self) -> Result<Option<Arc<NumberField>>, ExactError> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) if !a.same_field(b) => Err(ExactError::IncompatibleFields),
            (Some(a), _) => Ok(Some(a.clone())),
            (None, b) => Ok(b.clone()),
        }
    }

    fn reduce(field: Option<Arc<NumberField>>, p: QPoly) -> Self {
        let coords = match &field {
            Some(f) => p.rem(&f.modulus),
            None => p,
        };
        NumberFieldElem { field, coords }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        let f = self.join(other)?;
        Ok(Self::reduce(f, &self.coords + &other.coords))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ExactError> {
        let f = self.join(other)?;
        Ok(Self::reduce(f, &self.coords - &other.coords))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        let f = self.join(other)?;
        Ok(Self::reduce(f, &self.coords * &other.coords))
    }

    pub fn try_inverse(&self) -> Result<Self, ExactError> {
        if self.coords.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        match &self.field {
            None => Ok(Self::rational(BigRational::one() / self.coords.coeff(0))),
            Some(f) => {
                let (g, s, _) = self.coords.ext_gcd(&f.modulus);
                debug_assert_eq!(g, QPoly::one(), "modulus is irreducible");
                Ok(Self::reduce(Some(f.clone()), s))
            }
        }
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ExactError> {
        self.try_mul(&other.try_inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Matrix of multiplication by `self` on the power basis (columns are images).
    pub fn mul_matrix(&self) -> Matrix<BigRational> {
        let Some(f) = &self.field else {
            return Matrix::diagonal(&[self.coords.coeff(0)]);
        };
        let n = f.degree();
        let cols: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut basis = vec![BigRational::zero(); i + 1];
                basis[i] = BigRational::one();
                let prod = Self::reduce(Some(f.clone()), &self.coords * &QPoly::new(basis));
                (0..n).map(|k| prod.coords.coeff(k)).collect()
            })
            .collect();
        Matrix::from_columns(&cols).expect("square")
    }

    pub fn norm(&self) -> BigRational {
        self.mul_matrix().det().expect("square")
    }

    pub fn trace(&self) -> BigRational {
        self.mul_matrix().trace()
    }

    /// Enclosure of the real value under the field's real embedding, with the
    /// generator's isolating interval refined to at most `width`.
    pub fn enclosure(&self, width: &BigRational) -> Result<RatInterval, ExactError> {
        let Some(f) = &self.field else {
            return Ok(RatInterval::point(self.coords.coeff(0)));
        };
        let Embedding::Real(iv) = &f.embedding else {
            return if self.as_rational().is_some() {
                Ok(RatInterval::point(self.coords.coeff(0)))
            } else {
                Err(ExactError::NotReal)
            };
        };
        let r = refine(&f.modulus, iv, width);
        let x = RatInterval::new(r.lo, r.hi);
        Ok(self
            .coords
            .coeffs()
            .iter()
            .rev()
            .fold(RatInterval::point(BigRational::zero()), |acc, c| {
                &(&acc * &x) + &RatInterval::point(c.clone())
            }))
    }

    /// Sign under the real embedding, decided by interval refinement.
    pub fn sign(&self) -> Result<Ordering, ExactError> {
        if let Some(r) = self.as_rational() {
            return Ok(r.cmp(&BigRational::zero()));
        }
        let mut width = BigRational::one();
        let half = BigRational::new(1.into(), 2.into());
        loop {
            if let Some(s) = self.enclosure(&width)?.sign() {
                return Ok(s);
            }
            width = &width * &half;
        }
    }

    pub fn cmp_rational(&self, r: &BigRational) -> Result<Ordering, ExactError> {
        (self.clone() - NumberFieldElem::rational(r.clone())).sign()
    }

    pub fn cmp_elem(&self, other: &Self) -> Result<Ordering, ExactError> {
        self.try_sub(other)?.sign()
    }

    pub fn is_positive(&self) -> Result<bool, ExactError> {
        Ok(self.sign()? == Ordering::Greater)
    }

    pub fn approx(&self) -> f64 {
        match self.enclosure(&BigRational::new(1.into(), (1u64 << 60).into())) {
            Ok(iv) => to_f64(&((&iv.lo + &iv.hi) / BigRational::from_integer(2.into()))),
            Err(_) => f64::NAN,
        }
    }
}

impl PartialEq for NumberFieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.join(other).is_ok()
    }
}

impl Zero for NumberFieldElem {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

impl One for NumberFieldElem {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl FromPrimitive for NumberFieldElem {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::rational(BigRational::from_integer(n.into())))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::rational(BigRational::from_integer(n.into())))
    }
}

impl Add for NumberFieldElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("mixed number fields")
    }
}

impl Sub for NumberFieldElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("mixed number fields")
    }
}

impl Mul for NumberFieldElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("mixed number fields")
    }
}

impl Div for NumberFieldElem {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.try_div(&rhs).expect("division in a number field")
    }
}

impl Neg for NumberFieldElem {
    type Output = Self;
    fn neg(self) -> Self {
        NumberFieldElem {
            field: self.field,
            coords: -&self.coords,
        }
    }
}

impl Field for NumberFieldElem {}

impl fmt::Display for NumberFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.coords.to_string().replace('x', "θ");
        write!(f, "{s}")
    }
}

impl Serialize for NumberFieldElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("NumberFieldElem", 2)?;
        let mp = self
            .field
            .as_ref()
            .map_or_else(|| "x".to_string(), |f| f.min_poly.to_string());
        st.serialize_field("min_poly", &mp)?;
        let coords: Vec<String> = self.coords().iter().map(rational_string).collect();
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}

impl NumberFieldElem {
    pub fn abs_cmp_one(&self) -> Result<Ordering, ExactError> {
        let a = if self.sign()? == Ordering::Less {
            -self.clone()
        } else {
            self.clone()
        };
        a.cmp_rational(&BigRational::one())
    }

    pub fn is_negative(&self) -> Result<bool, ExactError> {
        Ok(self.sign()? == Ordering::Less)
    }
}
