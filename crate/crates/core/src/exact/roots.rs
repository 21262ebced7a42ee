//! Certified real-root isolation with Sturm sequences.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::factor::{rational_roots, squarefree_decomposition};
use super::{ExactError, QPoly, ZPoly};
use crate::rational_string;

/// Closed rational interval. When `lo == hi` it pins an exact rational root;
/// otherwise the root lies strictly inside and neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn exact(r: BigRational) -> Self {
        RootInterval { lo: r.clone(), hi: r }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// Whether the isolated root is certified to lie in the open interval `(a, b)`.
    pub fn within(&self, a: &BigRational, b: &BigRational) -> bool {
        if self.is_exact() {
            &self.lo > a && &self.lo < b
        } else {
            &self.lo >= a && &self.hi <= b
        }
    }

    /// Sign of every point of the interval, if uniform.
    pub fn sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() || (self.lo.is_zero() && !self.is_exact()) {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() || (self.hi.is_zero() && !self.is_exact()) {
            Some(Ordering::Less)
        } else if self.is_exact() && self.lo.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

impl Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [rational_string(&self.lo), rational_string(&self.hi)].serialize(s)
    }
}

/// One distinct real root with its multiplicity in the original polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealRoot {
    pub interval: RootInterval,
    pub multiplicity: u32,
}

/// Sturm chain of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(p: &QPoly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(-&r);
        }
        SturmChain { chain }
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = None;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last.is_some_and(|l| l != s) {
                count += 1;
            }
            last = Some(s);
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| p.eval(x).cmp(&BigRational::zero())))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let lead = p.leading().cmp(&BigRational::zero());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                lead.reverse()
            } else {
                lead
            }
        }))
    }

    /// Number of distinct roots in the half-open interval `(a, b]`.
    pub fn count_between(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at_infinity(true)
    }

    /// Number of distinct roots in `(-inf, a]`.
    pub fn count_below(&self, a: &BigRational) -> usize {
        self.variations_at_infinity(false) - self.variations_at(a)
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Integer bound strictly above the absolute value of every root (Cauchy).
fn cauchy_bound(p: &QPoly) -> BigInt {
    let lead = p.leading().abs();
    let m = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    (m + BigRational::one()).ceil().to_integer() + 1
}

/// Isolates the real roots of a square-free polynomial with no rational roots.
/// Intervals are integer-aligned until they have width one, so every output
/// interval lies inside some `(k, k + 1)` or a bisection of it.
fn isolate_irrational(p: &QPoly) -> Vec<RootInterval> {
    let sturm = SturmChain::new(p);
    let b = BigRational::from_integer(cauchy_bound(p));
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm.count_between(&lo, &hi);
        if count == 0 {
            continue;
        }
        let width = &hi - &lo;
        if count == 1 && width <= one {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = if width > one {
            ((&lo + &hi) / &two).floor()
        } else {
            (&lo + &hi) / &two
        };
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out
}

/// Isolates every distinct real root of a nonzero integer polynomial.
///
/// Rational roots come back as exact intervals; irrational roots as open
/// intervals with rational endpoints, certified by Sturm counts. Results are
/// sorted by interval midpoint.
pub fn isolate_real_roots(p: &ZPoly) -> Result<Vec<RealRoot>, ExactError> {
    if p.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&p.to_rational()) {
        let mut rest = part.clone();
        for r in rational_roots(&part.to_primitive_integer()) {
            out.push(RealRoot {
                interval: RootInterval::exact(r.clone()),
                multiplicity: mult,
            });
            rest = rest.div_rem(&QPoly::linear_root(r)).0;
        }
        if rest.degree().unwrap_or(0) > 0 {
            out.extend(isolate_irrational(&rest).into_iter().map(|interval| RealRoot {
                interval,
                multiplicity: mult,
            }));
        }
    }
    out.sort_by_key(|r| r.interval.midpoint());
    Ok(out)
}

/// Number of real roots counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &QPoly) -> usize {
    squarefree_decomposition(p)
        .iter()
        .map(|(s, m)| SturmChain::new(s).count_all() * *m as usize)
        .sum()
}

/// Number of roots in `(-inf, 0)` counted with multiplicity.
pub fn negative_root_count_with_multiplicity(p: &QPoly) -> usize {
    squarefree_decomposition(p)
        .iter()
        .map(|(s, m)| {
            let sturm = SturmChain::new(s);
            let below = sturm.count_below(&BigRational::zero());
            let at_zero = usize::from(s.eval(&BigRational::zero()).is_zero());
            (below - at_zero) * *m as usize
        })
        .sum()
}

/// Number of distinct roots in `(0, +inf)` of a square-free polynomial.
pub fn positive_root_count(p: &QPoly) -> usize {
    SturmChain::new(p).count_above(&BigRational::zero())
}

/// Bisects an irrational-root interval of the square-free `p` until its width
/// is at most `width`.
pub fn refine(p: &QPoly, interval: &RootInterval, width: &BigRational) -> RootInterval {
    if interval.is_exact() {
        return interval.clone();
    }
    let two = BigRational::from_integer(2.into());
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    let lo_sign = p.eval(&lo).cmp(&BigRational::zero());
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let s = p.eval(&mid).cmp(&BigRational::zero());
        if s == Ordering::Equal {
            return RootInterval::exact(mid);
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootInterval { lo, hi }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_i64s(c)
    }

    #[test]
    fn golden_ratio_square_roots() {
        // p(0)=1, p(1)=-1, p(2)=-1, p(3)=1
        let roots = isolate_real_roots(&z(&[1, -3, 1])).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].interval.within(&q(0, 1), &q(1, 1)));
        assert!(roots[1].interval.within(&q(2, 1), &q(3, 1)));
    }

    #[test]
    fn cubic_with_one_real_root() {
        // p(1)=-1, p(2)=3
        let p = z(&[-1, 0, -1, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].interval.within(&q(1, 1), &q(2, 1)));
        assert_eq!(SturmChain::new(&p.to_rational()).count_all(), 1);
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&z(&[1, 0, 1])).unwrap().is_empty());
        assert!(matches!(
            isolate_real_roots(&ZPoly::zero()),
            Err(ExactError::ZeroPolynomial)
        ));
    }

    #[test]
    fn multiplicities_and_exact_roots() {
        // (x-1)^2 (x+2) (x^2-2)
        let p = &(&z(&[-1, 1]).pow(2) * &z(&[2, 1])) * &z(&[-2, 0, 1]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 4);
        assert_eq!(roots[0].interval, RootInterval::exact(q(-2, 1)));
        assert!(roots[1].interval.within(&q(-2, 1), &q(-1, 1)));
        assert_eq!(roots[2].interval, RootInterval::exact(q(1, 1)));
        assert_eq!(roots[2].multiplicity, 2);
        assert!(roots[3].interval.within(&q(1, 1), &q(2, 1)));
    }

    #[test]
    fn three_positive_roots() {
        let p = z(&[-1, 6, -5, 1]).to_rational();
        assert_eq!(positive_root_count(&p), 3);
        assert_eq!(real_root_count_with_multiplicity(&p), 3);
        assert_eq!(negative_root_count_with_multiplicity(&p), 0);
    }

    #[test]
    fn refinement_shrinks() {
        let p = z(&[-2, 0, 1]).to_rational();
        let roots = isolate_real_roots(&z(&[-2, 0, 1])).unwrap();
        let r = refine(&p, &roots[1].interval, &q(1, 1000));
        assert!(r.width() <= q(1, 1000));
        assert!(&r.lo * &r.lo < q(2, 1) && &r.hi * &r.hi > q(2, 1));
    }

    #[test]
    fn interval_count_matches_distinct_real_roots_of_factored_inputs() {
        // cross-check against factors whose real roots are known
        let cases: Vec<(ZPoly, usize)> = vec![
            (&z(&[-1, 1]) * &z(&[1, -3, 1]), 3),
            (&z(&[1, 1]).pow(2) * &z(&[1, 0, 1]), 1),
            (&z(&[-5, 0, 1]) * &z(&[-5, 0, 1]), 2),
            (&z(&[-1, 0, -1, 1]) * &z(&[3, 1]), 2),
        ];
        for (p, expected) in cases {
            assert_eq!(isolate_real_roots(&p).unwrap().len(), expected, "{p}");
        }
    }
}
