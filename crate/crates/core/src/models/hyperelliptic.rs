use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::classify::{rotation_normal_form, Eta};
use crate::liealg::parse_rational;
use crate::{rational_string, IntMatrix, QMatrix};

use super::ModelError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticLatticeClass {
    pub eta: Eta,
    pub pq: (i64, i64),
    pub st: (BigRational, BigRational),
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl HyperellipticLatticeClass {
    pub fn new(eta: Eta, pq: (i64, i64), st: (BigRational, BigRational)) -> Result<Self, ModelError> {
        let unit = |x: &BigRational| !x.is_negative() && x < &BigRational::one();
        if !unit(&st.0) || !unit(&st.1) {
            return Err(ModelError::InvalidParameter("s and t must lie in [0, 1)".into()));
        }
        Ok(HyperellipticLatticeClass { eta, pq, st })
    }

    /// Monodromy with `A'` in the upper block and bottom row `(p, q, 1)`.
    pub fn monodromy(&self) -> IntMatrix {
        crate::classify::hyperelliptic_monodromy(&rotation_normal_form(self.eta), self.pq.0, self.pq.1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "eta": self.eta.as_str(),
            "pq": [self.pq.0, self.pq.1],
            "st": [rational_string(&self.st.0), rational_string(&self.st.1)],
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, ModelError> {
        let bad = |m: &str| ModelError::InvalidParameter(m.to_string());
        let eta = v["eta"]
            .as_str()
            .and_then(Eta::parse)
            .ok_or_else(|| bad("eta must be one of pi, 2pi/3, pi/2, pi/3"))?;
        let pq = v["pq"]
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| bad("pq must be [p, q]"))?;
        let p = pq[0].as_i64().ok_or_else(|| bad("p must be an integer"))?;
        let qv = pq[1].as_i64().ok_or_else(|| bad("q must be an integer"))?;
        let st = v["st"]
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| bad("st must be [s, t]"))?;
        let s = parse_rational(&st[0]).map_err(|e| bad(&e.to_string()))?;
        let t = parse_rational(&st[1]).map_err(|e| bad(&e.to_string()))?;
        HyperellipticLatticeClass::new(eta, (p, qv), (s, t))
    }
}

/// The seven lattice classes: one with `(p, q) = (0, 0)` per angle and three
/// with `(p, q) = (1, 0)`.
pub fn hyperelliptic_lattices() -> Vec<HyperellipticLatticeClass> {
    let zero = || (BigRational::zero(), BigRational::zero());
    let mut out: Vec<_> = Eta::ALL
        .iter()
        .map(|&eta| HyperellipticLatticeClass {
            eta,
            pq: (0, 0),
            st: zero(),
        })
        .collect();
    out.push(HyperellipticLatticeClass {
        eta: Eta::Pi,
        pq: (1, 0),
        st: (q(1, 2), q(0, 1)),
    });
    out.push(HyperellipticLatticeClass {
        eta: Eta::TwoPiOverThree,
        pq: (1, 0),
        st: (q(1, 3), q(1, 3)),
    });
    out.push(HyperellipticLatticeClass {
        eta: Eta::PiOverTwo,
        pq: (1, 0),
        st: (q(1, 2), q(1, 2)),
    });
    out
}

fn shifted(eta: Eta) -> QMatrix {
    (&rotation_normal_form(eta) - &IntMatrix::identity(2)).to_rational()
}

fn is_integral(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Whether `v` lies in `(A' - I) Z^2`.
fn in_image(eta: Eta, v: &[BigRational]) -> bool {
    let inv = shifted(eta).inverse().expect("rotations have no eigenvalue 1");
    is_integral(&inv.mul_vec(v))
}

/// Moving `v3` to `s v1 + t v2 + v3` turns the offset into
/// `d = (A' - I)(s, t)`. The lattice is preserved iff `d` is integral, and it
/// realizes the class of `(p, q)` iff `d - (p, q) ∈ (A' - I) Z^2`.
pub fn verify_hyperelliptic_lattice(c: &HyperellipticLatticeClass) -> bool {
    let d = shifted(c.eta).mul_vec(&[c.st.0.clone(), c.st.1.clone()]);
    if !is_integral(&d) {
        return false;
    }
    let diff = [
        &d[0] - BigRational::from_integer(c.pq.0.into()),
        &d[1] - BigRational::from_integer(c.pq.1.into()),
    ];
    in_image(c.eta, &diff)
}

/// Integer matrices of determinant ±1 with entries in `[-2, 2]` commuting
/// with `A'`.
fn centralizer(eta: Eta) -> Vec<IntMatrix> {
    let a = rotation_normal_form(eta);
    let mut out = Vec::new();
    let r = -2..=2i64;
    for x in r.clone() {
        for y in r.clone() {
            for z in r.clone() {
                for w in r.clone() {
                    if (x * w - y * z).abs() != 1 {
                        continue;
                    }
                    let c = IntMatrix::from_i64_rows(&[&[x, y], &[z, w]]);
                    if &c * &a == &a * &c {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// Offsets are equivalent when some automorphism commuting with `A'` carries
/// one to the other modulo `(A' - I) Z^2`.
fn equivalent_offsets(eta: Eta, centralizer: &[IntMatrix], a: (i64, i64), b: (i64, i64)) -> bool {
    let a = [BigInt::from(a.0), BigInt::from(a.1)];
    centralizer.iter().any(|c| {
        let ca = c.mul_vec(&a);
        let diff = [
            BigRational::from_integer(&ca[0] - b.0),
            BigRational::from_integer(&ca[1] - b.1),
        ];
        in_image(eta, &diff)
    })
}

#[derive(Clone, Debug)]
pub struct LatticeScan {
    pub max_denominator: i64,
    pub classes: Vec<HyperellipticLatticeClass>,
    /// Classes found by the scan that match no listed class.
    pub extra: Vec<HyperellipticLatticeClass>,
    /// Listed classes the scan did not reach.
    pub missing: Vec<HyperellipticLatticeClass>,
}

impl LatticeScan {
    pub fn nontrivial_for(&self, eta: Eta) -> Vec<&HyperellipticLatticeClass> {
        let cz = centralizer(eta);
        self.classes
            .iter()
            .filter(|c| c.eta == eta && !equivalent_offsets(eta, &cz, c.pq, (0, 0)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let list = |v: &[HyperellipticLatticeClass]| v.iter().map(|c| c.to_json()).collect::<Vec<_>>();
        json!({
            "max_denominator": self.max_denominator,
            "class_count": self.classes.len(),
            "classes": list(&self.classes),
            "extra": list(&self.extra),
            "missing": list(&self.missing),
        })
    }
}

fn fractions(max_den: i64) -> Vec<BigRational> {
    let mut v: Vec<BigRational> = (1..=max_den).flat_map(|d| (0..d).map(move |n| q(n, d))).collect();
    v.sort();
    v.dedup();
    v
}

/// Exhaustive search over `(s, t)` with denominators up to `max_den` and
/// offsets `0 ≤ p, q ≤ max_offset`, grouped into isomorphism classes.
pub fn scan_hyperelliptic(max_den: i64, max_offset: i64) -> LatticeScan {
    let fr = fractions(max_den.max(1));
    let mut offsets: Vec<(i64, i64)> = (0..=max_offset)
        .flat_map(|p| (0..=max_offset).map(move |q| (p, q)))
        .collect();
    offsets.sort_by_key(|&(p, q)| (p + q, q));
    let mut classes: Vec<HyperellipticLatticeClass> = Vec::new();
    for eta in Eta::ALL {
        let cz = centralizer(eta);
        for &pq in &offsets {
            for s in &fr {
                for t in &fr {
                    let c = HyperellipticLatticeClass {
                        eta,
                        pq,
                        st: (s.clone(), t.clone()),
                    };
                    if !verify_hyperelliptic_lattice(&c) {
                        continue;
                    }
                    let known = classes
                        .iter()
                        .any(|k| k.eta == eta && equivalent_offsets(eta, &cz, k.pq, pq));
                    if !known {
                        classes.push(c);
                    }
                }
            }
        }
    }
    let listed = hyperelliptic_lattices();
    let same = |a: &HyperellipticLatticeClass, b: &HyperellipticLatticeClass| {
        a.eta == b.eta && equivalent_offsets(a.eta, &centralizer(a.eta), a.pq, b.pq)
    };
    let extra = classes
        .iter()
        .filter(|c| !listed.iter().any(|l| same(c, l)))
        .cloned()
        .collect();
    let missing = listed
        .iter()
        .filter(|l| !classes.iter().any(|c| same(c, l)))
        .cloned()
        .collect();
    LatticeScan {
        max_denominator: max_den,
        classes,
        extra,
        missing,
    }
}
