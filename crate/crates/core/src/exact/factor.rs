use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{ExactError, QPoly, ZPoly};

/// Largest degree [`factor_over_integers`] accepts.
pub const MAX_FACTOR_DEGREE: usize = 4;

/// Factorization `leading * prod(factor^multiplicity)` of an integer polynomial.
///
/// Every factor is primitive with positive leading coefficient and irreducible
/// over the integers; factors are sorted by degree, then by coefficients read
/// from the leading term down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPoly {
    pub leading: BigInt,
    pub factors: Vec<(ZPoly, u32)>,
}

impl FactoredPoly {
    pub fn expand(&self) -> ZPoly {
        self.factors
            .iter()
            .fold(ZPoly::constant(self.leading.clone()), |acc, (f, m)| &acc * &f.pow(*m))
    }

    pub fn is_irreducible(&self) -> bool {
        self.leading.abs().is_one() && self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn degree_of_factors(&self, d: usize) -> impl Iterator<Item = &(ZPoly, u32)> {
        self.factors.iter().filter(move |(f, _)| f.degree() == Some(d))
    }
}

impl Serialize for FactoredPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("FactoredPoly", 2)?;
        st.serialize_field("leading", &self.leading.to_string())?;
        let factors: Vec<(String, u32)> = self.factors.iter().map(|(f, m)| (f.to_string(), *m)).collect();
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All distinct rational roots of a nonzero integer polynomial, ascending.
pub fn rational_roots(p: &ZPoly) -> Vec<BigRational> {
    let mut roots = Vec::new();
    let mut p = p.clone();
    if p.is_zero() {
        return roots;
    }
    if p.coeff(0).is_zero() {
        roots.push(BigRational::zero());
        let shift = p.coeffs().iter().take_while(|c| c.is_zero()).count();
        p = ZPoly::new(p.coeffs()[shift..].to_vec());
    }
    if p.degree() == Some(0) {
        return roots;
    }
    let a0 = p.coeff(0);
    let an = p.leading();
    let qp = p.to_rational();
    for num in divisors(&a0) {
        for den in divisors(&an) {
            if !num.gcd(&den).is_one() {
                continue;
            }
            for sign in [1, -1] {
                let r = BigRational::new(&num * sign, den.clone());
                if qp.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn cmp_factor(a: &ZPoly, b: &ZPoly) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Finds a quadratic factor of a primitive quartic without rational roots by
/// Kronecker's method: the values of a factor at 0, 1, -1 divide those of `p`.
fn quadratic_factor_of_quartic(p: &ZPoly) -> Option<ZPoly> {
    let v0 = p.eval(&BigInt::zero());
    let v1 = p.eval(&BigInt::one());
    let vm = p.eval(&BigInt::from(-1));
    let signed = |v: &BigInt| -> Vec<BigInt> { divisors(v).into_iter().flat_map(|d| [d.clone(), -d]).collect() };
    let two = BigInt::from(2);
    for d0 in divisors(&v0) {
        for d1 in signed(&v1) {
            for dm in signed(&vm) {
                let s = &d1 + &dm;
                if !s.is_even() {
                    continue;
                }
                let c2 = &s / &two - &d0;
                if c2.is_zero() {
                    continue;
                }
                let c1 = (&d1 - &dm) / &two;
                let mut g = ZPoly::new(vec![d0.clone(), c1, c2]);
                if g.leading().is_negative() {
                    g = -&g;
                }
                if let Some(h) = p.exact_div(&g) {
                    if h.degree() == Some(2) {
                        return Some(g);
                    }
                }
            }
        }
    }
    None
}

/// Complete factorization over the integers for polynomials of degree at most 4.
pub fn factor_over_integers(p: &ZPoly) -> Result<FactoredPoly, ExactError> {
    let deg = p.degree().ok_or(ExactError::ZeroPolynomial)?;
    if deg > MAX_FACTOR_DEGREE {
        return Err(ExactError::DegreeTooLarge {
            degree: deg,
            max: MAX_FACTOR_DEGREE,
        });
    }
    let mut leading = p.content();
    if p.leading().is_negative() {
        leading = -leading;
    }
    let mut rest = p.map(|c| c / &leading);
    let mut factors: Vec<(ZPoly, u32)> = Vec::new();

    for r in rational_roots(&rest) {
        let lin = ZPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&lin) {
            rest = q;
            mult += 1;
        }
        factors.push((lin, mult));
    }

    match rest.degree() {
        Some(0) => {}
        Some(4) => match quadratic_factor_of_quartic(&rest) {
            Some(g) => {
                let h = rest.exact_div(&g).expect("factor divides");
                if g == h {
                    factors.push((g, 2));
                } else {
                    factors.push((g, 1));
                    factors.push((h, 1));
                }
            }
            None => factors.push((rest, 1)),
        },
        Some(_) => factors.push((rest, 1)),
        None => unreachable!("nonzero input"),
    }
    factors.sort_by(|a, b| cmp_factor(&a.0, &b.0));
    Ok(FactoredPoly { leading, factors })
}

/// Square-free decomposition over the rationals (Yun): monic, pairwise coprime
/// square-free `s_i` with `p = lc * prod s_i^i`. Constant parts are dropped.
pub fn squarefree_decomposition(p: &QPoly) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        let nb = b.div_rem(&a).0;
        let nc = d.div_rem(&a).0;
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        d = &nc - &nb.derivative();
        b = nb;
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_i64s(c)
    }

    #[test]
    fn factor_examples() {
        // rational-root test then division: x^3 - 4x^2 + 4x - 1 = (x - 1)(x^2 - 3x + 1)
        let f = factor_over_integers(&z(&[-1, 4, -4, 1])).unwrap();
        assert_eq!(f.factors, vec![(z(&[-1, 1]), 1), (z(&[1, -3, 1]), 1)]);
        assert_eq!(f.leading, BigInt::one());

        let f = factor_over_integers(&z(&[1, 0, 1])).unwrap();
        assert!(f.is_irreducible());

        let cube = z(&[-1, 1]).pow(3);
        let f = factor_over_integers(&cube).unwrap();
        assert_eq!(f.factors, vec![(z(&[-1, 1]), 3)]);
    }

    #[test]
    fn factor_quartic_into_quadratics() {
        let p = &z(&[1, 0, 1]) * &z(&[-1, -1, 1]);
        let f = factor_over_integers(&p).unwrap();
        assert_eq!(f.factors, vec![(z(&[-1, -1, 1]), 1), (z(&[1, 0, 1]), 1)]);
        let sq = z(&[1, 0, 1]).pow(2);
        assert_eq!(factor_over_integers(&sq).unwrap().factors, vec![(z(&[1, 0, 1]), 2)]);
        // x^4 + 1 is irreducible over the integers
        assert!(factor_over_integers(&z(&[1, 0, 0, 0, 1])).unwrap().is_irreducible());
    }

    #[test]
    fn factor_errors_and_content() {
        assert!(matches!(
            factor_over_integers(&ZPoly::zero()),
            Err(ExactError::ZeroPolynomial)
        ));
        assert!(matches!(
            factor_over_integers(&z(&[1, 0, 0, 0, 0, 1])),
            Err(ExactError::DegreeTooLarge { .. })
        ));
        let f = factor_over_integers(&z(&[4, -6])).unwrap();
        assert_eq!(f.leading, BigInt::from(-2));
        assert_eq!(f.factors, vec![(z(&[-2, 3]), 1)]);
    }

    #[test]
    fn yun_multiplicities() {
        let p = &z(&[-1, 1]).pow(3) * &z(&[1, 0, 1]).pow(2);
        let sf = squarefree_decomposition(&p.to_rational());
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (z(&[1, 0, 1]).to_rational(), 2));
        assert_eq!(sf[1], (z(&[-1, 1]).to_rational(), 3));
    }

    proptest! {
        #[test]
        fn factor_then_expand_is_identity(
            coeffs in prop::collection::vec(-9i64..=9, 1..=4)
        ) {
            let p = z(&coeffs);
            prop_assume!(!p.is_zero());
            let f = factor_over_integers(&p).unwrap();
            prop_assert_eq!(f.expand(), p);
            for (g, _) in &f.factors {
                prop_assert!(g.leading().is_positive());
                prop_assert!(g.content().is_one());
                if g.degree().unwrap() >= 2 {
                    prop_assert!(rational_roots(g).is_empty());
                }
            }
        }

        #[test]
        fn factoring_products_recovers_factors(
            a in prop::collection::vec(-9i64..=9, 2..=3),
            b in prop::collection::vec(-9i64..=9, 2..=3),
        ) {
            let (pa, pb) = (z(&a), z(&b));
            prop_assume!(pa.degree().unwrap_or(0) >= 1 && pb.degree().unwrap_or(0) >= 1);
            let p = &pa * &pb;
            prop_assume!(p.degree().unwrap() <= 4);
            let f = factor_over_integers(&p).unwrap();
            prop_assert_eq!(f.expand(), p);
            let total: u32 = f.factors.iter().map(|(_, m)| *m).sum();
            prop_assert!(total >= 2);
        }
    }
}
