//! Sparse multivariate polynomials with rational coefficients.
//!
//! Used as a scalar type when identities must hold for all parameter values
//! (symbolic `q`, `(a, b)`, or the coordinates of a group law).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl MPoly {
    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { terms }
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        MPoly {
            terms: BTreeMap::from([(e, BigRational::one())]),
        }
    }

    pub fn from_int(v: i64) -> Self {
        MPoly::constant(BigRational::from_integer(v.into()))
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Vec::is_empty)
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(MPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = MPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms
            .keys()
            .map(|e| e.get(i).copied().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Substitutes polynomials for variables; variables beyond `values.len()`
    /// are left in place.
    pub fn substitute(&self, values: &[Option<MPoly>]) -> Self {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let factor = match values.get(i) {
                    Some(Some(v)) => v.pow(k),
                    _ => MPoly::var(i).pow(k),
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        out
    }

    /// Evaluates at a rational point; missing coordinates count as zero.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                let x = point.get(i).cloned().unwrap_or_else(BigRational::zero);
                t *= num_traits::pow(x, k as usize);
            }
            acc + t
        })
    }

    /// Rewrites `s^2` as `1 - c^2` until `s` appears at most linearly, giving a
    /// canonical form modulo `c^2 + s^2 - 1`.
    pub fn reduce_circle(&self, c: usize, s: usize) -> Self {
        let mut out = MPoly::zero();
        for (e, coeff) in &self.terms {
            let ks = e.get(s).copied().unwrap_or(0);
            let mut base = e.clone();
            if base.len() > s {
                base[s] = ks % 2;
            }
            let mut term = MPoly::zero();
            term.add_term(base, coeff.clone());
            let one_minus_c2 = &MPoly::one() - &MPoly::var(c).pow(2);
            term = &term * &one_minus_c2.pow(ks / 2);
            out = &out + &term;
        }
        out
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                let name = names.get(i).map_or_else(|| format!("v{i}"), |s| s.to_string());
                match k {
                    0 => {}
                    1 => mono.push(name),
                    _ => mono.push(format!("{name}^{k}")),
                }
            }
            let coeff = if mono.is_empty() || !c.abs_is_one() {
                Some(c.abs().to_string())
            } else {
                None
            };
            let body = match coeff {
                Some(cs) if mono.is_empty() => cs,
                Some(cs) => format!("{cs}*{}", mono.join("*")),
                None => mono.join("*"),
            };
            parts.push((c < &BigRational::zero(), body));
        }
        let mut s = String::new();
        for (i, (neg, body)) in parts.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&body);
        }
        s
    }
}

trait AbsOne {
    fn abs_is_one(&self) -> bool;
    fn abs(&self) -> BigRational;
}

impl AbsOne for BigRational {
    fn abs_is_one(&self) -> bool {
        num_traits::Signed::abs(self).is_one()
    }
    fn abs(&self) -> BigRational {
        num_traits::Signed::abs(self)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&[]))
    }
}

impl Zero for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MPoly {
    fn one() -> Self {
        MPoly::constant(BigRational::one())
    }
}

impl FromPrimitive for MPoly {
    fn from_i64(n: i64) -> Option<Self> {
        Some(MPoly::from_int(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(MPoly::constant(BigRational::from_integer(n.into())))
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let n = ea.len().max(eb.len());
                let e: Exponents = (0..n)
                    .map(|i| ea.get(i).copied().unwrap_or(0) + eb.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.scale(&-BigRational::one())
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        &self + &rhs
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        &self - &rhs
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        &self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn binomial_square() {
        let (x, y) = (MPoly::var(0), MPoly::var(1));
        let lhs = (&x + &y).pow(2);
        let rhs = &(&x.pow(2) + &(&x * &y).scale(&q(2))) + &y.pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.eval(&[q(2), q(3)]), q(25));
        assert_eq!(lhs.to_string_with(&["x", "y"]), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn cancellation_trims() {
        let x = MPoly::var(3);
        assert!((&x - &x).is_zero());
        assert_eq!(MPoly::var(0) * MPoly::one(), MPoly::var(0));
    }

    #[test]
    fn circle_reduction() {
        let (c, s) = (MPoly::var(0), MPoly::var(1));
        let p = &c.pow(2) + &s.pow(2);
        assert_eq!(p.reduce_circle(0, 1), MPoly::one());
        let p = s.pow(3);
        assert_eq!(p.reduce_circle(0, 1), &s - &(&s * &c.pow(2)));
    }

    #[test]
    fn substitution() {
        let (x, y) = (MPoly::var(0), MPoly::var(1));
        let p = &x * &y;
        let sub = p.substitute(&[Some(&y + &MPoly::one()), None]);
        assert_eq!(sub, &y.pow(2) + &y);
    }
}
