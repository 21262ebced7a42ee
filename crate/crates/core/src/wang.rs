//! Wang groups of rank four presented as extensions `0 -> Λ -> Γ -> Z^k -> 0`.
//!
//! The fiber is either free abelian of rank `4 - k` or, for `k = 1`, the
//! Heisenberg-type group `Λ_n = <g1, g2, g3 | [g1, g2] = g3^n, g3 central>`.
//! Monodromy matrices act on fiber coordinates in the row convention
//! `g_i -> prod_j g_j^{m_ij}`, so conjugating by an integer matrix changes
//! nothing computed here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::{ExactError, Matrix};
use crate::{IntMatrix, QMatrix};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum WangError {
    #[error("invalid fiber: {0}")]
    InvalidFiber(String),
    #[error("invalid rank: {0}")]
    InvalidRank(String),
    #[error("malformed monodromy: {0}")]
    Malformed(String),
    #[error("monodromy matrix is not invertible over the integers (det {0})")]
    NotInvertible(String),
    #[error("eps = {eps} but det B = {det}; the center action must equal det B")]
    EpsMismatch { eps: i64, det: String },
    #[error("monodromy matrices do not commute")]
    NotCommuting,
    #[error("power must be positive, got {0}")]
    InvalidPower(i64),
    #[error("operation needs k = 1")]
    NeedsRankOne,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fiber {
    Abelian { rank: usize },
    Heisenberg { n: u32 },
}

impl Fiber {
    pub fn rank(&self) -> usize {
        match self {
            Fiber::Abelian { rank } => *rank,
            Fiber::Heisenberg { .. } => 3,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Fiber::Abelian { rank } => json!(format!("Z{rank}")),
            Fiber::Heisenberg { n } => json!({ "Lambda": n }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monodromy {
    /// `k = 1`, abelian fiber.
    Abelian(IntMatrix),
    /// `k = 1`, fiber `Λ_n`: induced action `B` on `Λ_n / Z`, action `eps` on
    /// the center, and the central offsets `g1 -> ... g3^k`, `g2 -> ... g3^l`.
    Heisenberg {
        b: IntMatrix,
        eps: i64,
        offsets: Option<(i64, i64)>,
    },
    /// `k >= 2`, abelian fiber: one matrix per generator of `Z^k`.
    Commuting(Vec<IntMatrix>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WangExtension {
    fiber: Fiber,
    k: usize,
    monodromy: Monodromy,
}

fn unimodular(m: &IntMatrix) -> Result<(), WangError> {
    if m.rows() == 0 {
        return Ok(());
    }
    let det = m.det()?;
    if !det.abs().is_one() {
        return Err(WangError::NotInvertible(det.to_string()));
    }
    Ok(())
}

impl WangExtension {
    pub fn abelian(a: IntMatrix) -> Result<Self, WangError> {
        if !a.is_square() || a.rows() != 3 {
            return Err(WangError::Malformed(format!(
                "fiber Z3 needs a 3x3 monodromy, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        unimodular(&a)?;
        Ok(WangExtension {
            fiber: Fiber::Abelian { rank: 3 },
            k: 1,
            monodromy: Monodromy::Abelian(a),
        })
    }

    /// Validates `eps = det B` by applying the automorphism to the defining
    /// commutator inside the matrix model of `Λ_n`.
    pub fn heisenberg(n: u32, b: IntMatrix, eps: i64, offsets: Option<(i64, i64)>) -> Result<Self, WangError> {
        if n == 0 {
            return Err(WangError::InvalidFiber("Lambda_n needs n >= 1".into()));
        }
        if !b.is_square() || b.rows() != 2 {
            return Err(WangError::Malformed("B must be 2x2".into()));
        }
        unimodular(&b)?;
        if eps != 1 && eps != -1 {
            return Err(WangError::Malformed(format!("eps must be 1 or -1, got {eps}")));
        }
        let (k_off, l_off) = offsets.unwrap_or((0, 0));
        let center = induced_center_action(n, &b, k_off, l_off);
        if center != eps {
            return Err(WangError::EpsMismatch {
                eps,
                det: b.det()?.to_string(),
            });
        }
        Ok(WangExtension {
            fiber: Fiber::Heisenberg { n },
            k: 1,
            monodromy: Monodromy::Heisenberg { b, eps, offsets },
        })
    }

    /// `k >= 2` with abelian fiber of rank `4 - k`.
    pub fn commuting(mats: Vec<IntMatrix>) -> Result<Self, WangError> {
        let k = mats.len();
        if !(2..=4).contains(&k) {
            return Err(WangError::InvalidRank(format!(
                "commuting monodromy needs 2 to 4 matrices, got {k}"
            )));
        }
        let r = 4 - k;
        for m in &mats {
            if m.rows() != r || m.cols() != r {
                return Err(WangError::Malformed(format!("expected {r}x{r} matrices")));
            }
            unimodular(m)?;
        }
        for i in 0..k {
            for j in i + 1..k {
                if &mats[i] * &mats[j] != &mats[j] * &mats[i] {
                    return Err(WangError::NotCommuting);
                }
            }
        }
        Ok(WangExtension {
            fiber: Fiber::Abelian { rank: r },
            k,
            monodromy: Monodromy::Commuting(mats),
        })
    }

    pub fn fiber(&self) -> &Fiber {
        &self.fiber
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn monodromy(&self) -> &Monodromy {
        &self.monodromy
    }

    /// Matrices of the induced action on the free abelianization of the
    /// fiber (`Z^r`, or `Z^2` for `Λ_n`).
    fn linear_parts(&self) -> Vec<IntMatrix> {
        match &self.monodromy {
            Monodromy::Abelian(a) => vec![a.clone()],
            Monodromy::Heisenberg { b, .. } => vec![b.clone()],
            Monodromy::Commuting(ms) => ms.clone(),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, WangError> {
        let obj = v
            .as_object()
            .ok_or_else(|| WangError::Malformed("expected a JSON object".into()))?;
        let fiber = match obj.get("fiber") {
            Some(Value::String(s)) => {
                let rank = s
                    .strip_prefix('Z')
                    .and_then(|r| r.parse::<usize>().ok())
                    .filter(|r| *r <= 3)
                    .ok_or_else(|| WangError::InvalidFiber(s.clone()))?;
                Fiber::Abelian { rank }
            }
            Some(Value::Object(o)) => {
                let n = o
                    .get("Lambda")
                    .and_then(Value::as_i64)
                    .filter(|n| *n >= 1 && *n <= u32::MAX as i64)
                    .ok_or_else(|| WangError::InvalidFiber("Lambda needs n >= 1".into()))?;
                Fiber::Heisenberg { n: n as u32 }
            }
            Some(other) => return Err(WangError::InvalidFiber(other.to_string())),
            None => Fiber::Abelian { rank: 3 },
        };
        let k = match obj.get("k") {
            Some(v) => v
                .as_i64()
                .filter(|k| (1..=4).contains(k))
                .ok_or_else(|| WangError::InvalidRank(v.to_string()))? as usize,
            None => 4 - fiber.rank(),
        };
        if fiber.rank() + k != 4 {
            return Err(WangError::InvalidRank(format!(
                "fiber rank {} plus k = {k} is not 4",
                fiber.rank()
            )));
        }
        let mono = obj
            .get("monodromy")
            .ok_or_else(|| WangError::Malformed("missing monodromy".into()))?;
        match (&fiber, k) {
            (Fiber::Heisenberg { n }, 1) => {
                let o = mono
                    .as_object()
                    .ok_or_else(|| WangError::Malformed("expected {\"B\", \"eps\"}".into()))?;
                let b = matrix_from_json(o.get("B").ok_or_else(|| WangError::Malformed("missing B".into()))?)?;
                let eps = match o.get("eps") {
                    Some(e) => e
                        .as_i64()
                        .ok_or_else(|| WangError::Malformed("eps must be an integer".into()))?,
                    None => b.det()?.to_i64().unwrap_or(0),
                };
                let offsets = match o.get("offsets") {
                    None | Some(Value::Null) => None,
                    Some(Value::Array(a)) if a.len() == 2 => {
                        let k = a[0].as_i64();
                        let l = a[1].as_i64();
                        match (k, l) {
                            (Some(k), Some(l)) => Some((k, l)),
                            _ => return Err(WangError::Malformed("offsets must be integers".into())),
                        }
                    }
                    Some(other) => return Err(WangError::Malformed(format!("offsets {other}"))),
                };
                WangExtension::heisenberg(*n, b, eps, offsets)
            }
            (Fiber::Abelian { .. }, 1) => WangExtension::abelian(matrix_from_json(mono)?),
            (Fiber::Abelian { rank }, _) => {
                let arr = mono
                    .as_array()
                    .ok_or_else(|| WangError::Malformed("expected a list of matrices".into()))?;
                let mats = arr
                    .iter()
                    .map(|m| {
                        if *rank == 0 {
                            Ok(Matrix::zeros(0, 0))
                        } else {
                            matrix_from_json(m)
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if mats.len() != k {
                    return Err(WangError::Malformed(format!(
                        "expected {k} monodromy matrices, got {}",
                        mats.len()
                    )));
                }
                WangExtension::commuting(mats)
            }
            _ => Err(WangError::InvalidRank("a Lambda fiber needs k = 1".into())),
        }
    }

    pub fn to_json(&self) -> Value {
        let mono = match &self.monodromy {
            Monodromy::Abelian(a) => matrix_to_json(a),
            Monodromy::Heisenberg { b, eps, offsets } => {
                let mut o = json!({ "B": matrix_to_json(b), "eps": eps });
                if let Some((k, l)) = offsets {
                    o["offsets"] = json!([k, l]);
                }
                o
            }
            Monodromy::Commuting(ms) => Value::Array(ms.iter().map(matrix_to_json).collect()),
        };
        json!({ "fiber": self.fiber.to_json(), "k": self.k, "monodromy": mono })
    }
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix, WangError> {
    let rows = v
        .as_array()
        .ok_or_else(|| WangError::Malformed("matrix must be a list of rows".into()))?;
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| WangError::Malformed("row must be a list".into()))?
                .iter()
                .map(|x| match x {
                    Value::Number(n) => n
                        .as_i64()
                        .map(BigInt::from)
                        .ok_or_else(|| WangError::Malformed(format!("non-integer entry {n}"))),
                    Value::String(s) => s
                        .parse::<BigInt>()
                        .map_err(|_| WangError::Malformed(format!("non-integer entry {s}"))),
                    other => Err(WangError::Malformed(format!("non-integer entry {other}"))),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(parsed)?)
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .into_iter()
            .map(|r| {
                Value::Array(
                    r.into_iter()
                        .map(|v| match v.to_i64() {
                            Some(i) => json!(i),
                            None => json!(v.to_string()),
                        })
                        .collect(),
                )
            })
            .collect(),
    )
}

/// The generators of `Λ_n` as upper unitriangular rational matrices:
/// `g1 = I + E12`, `g2 = I + E23`, `g3 = I + E13 / n`.
pub fn lambda_matrix_generators(n: i64) -> Result<[QMatrix; 3], WangError> {
    if n <= 0 {
        return Err(WangError::InvalidFiber(format!("Lambda_n needs n >= 1, got {n}")));
    }
    let unit = |i: usize, j: usize, v: BigRational| {
        let mut m = QMatrix::identity(3);
        m.set(i, j, v);
        m
    };
    let one = BigRational::one();
    Ok([
        unit(0, 1, one.clone()),
        unit(1, 2, one),
        unit(0, 2, BigRational::new(1.into(), n.into())),
    ])
}

fn qpow(m: &QMatrix, e: i64) -> QMatrix {
    if e >= 0 {
        m.pow(e as u32)
    } else {
        m.inverse().expect("unitriangular").pow((-e) as u32)
    }
}

pub fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ai = a.inverse().expect("invertible");
    let bi = b.inverse().expect("invertible");
    &(&(a * b) * &ai) * &bi
}

/// Image of `g1` and `g2` under the automorphism with linear part `b` (row
/// convention) and central offsets, and the resulting power of `g3` that
/// `[phi(g1), phi(g2)]` equals divided by `n`.
fn induced_center_action(n: u32, b: &IntMatrix, k_off: i64, l_off: i64) -> i64 {
    let [g1, g2, g3] = lambda_matrix_generators(n as i64).expect("n >= 1");
    let e = |i: usize, j: usize| b.get(i, j).to_i64().expect("small entries");
    let word = |x: i64, y: i64, z: i64| &(&qpow(&g1, x) * &qpow(&g2, y)) * &qpow(&g3, z);
    let p1 = word(e(0, 0), e(0, 1), k_off);
    let p2 = word(e(1, 0), e(1, 1), l_off);
    let c = commutator(&p1, &p2);
    // c = g3^m has (1,3) entry m / n; phi(g3^n) = g3^(n eps) forces eps = m / n
    let m = c.get(0, 2).clone() * BigRational::from_integer((n as i64).into());
    (m / BigRational::from_integer((n as i64).into()))
        .to_integer()
        .to_i64()
        .expect("determinant of a small matrix")
}

/// `b1` of `Γ`: rank of the free part of its abelianization.
pub fn abelianization_rank(w: &WangExtension) -> usize {
    let mats = w.linear_parts();
    let r = mats.first().map_or(0, IntMatrix::rows);
    if r == 0 {
        return w.k;
    }
    let id = QMatrix::identity(r);
    let stacked = mats.iter().fold(QMatrix::zeros(r, 0), |acc, m| {
        acc.hstack(&(&m.to_rational() - &id)).expect("same rows")
    });
    w.k + r - stacked.rank()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeSet {
    pub type_i: Membership,
    pub type_ii: Membership,
    pub type_iii: Membership,
    /// One line per decided membership explaining the construction or obstruction.
    pub reasons: Vec<String>,
}

impl TypeSet {
    pub fn members(&self) -> Vec<&'static str> {
        [("I", self.type_i), ("II", self.type_ii), ("III", self.type_iii)]
            .into_iter()
            .filter(|(_, m)| *m == Membership::Yes)
            .map(|(n, _)| n)
            .collect()
    }

    pub fn unknown(&self) -> Vec<&'static str> {
        [("I", self.type_i), ("II", self.type_ii), ("III", self.type_iii)]
            .into_iter()
            .filter(|(_, m)| *m == Membership::Unknown)
            .map(|(n, _)| n)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "members": self.members(), "unknown": self.unknown(), "reasons": self.reasons })
    }
}

fn has_finite_order(m: &IntMatrix) -> bool {
    let n = m.rows();
    if n == 0 {
        return true;
    }
    // orders of finite-order elements of GL(n, Z) for n <= 3 divide 12
    let id = IntMatrix::identity(n);
    m.pow(12) == id
}

fn is_unipotent(m: &IntMatrix) -> bool {
    let n = m.rows();
    m.char_poly()
        .map(|p| p == crate::exact::ZPoly::from_i64s(&[-1, 1]).pow(n as u32))
        .unwrap_or(false)
}

/// Which of the three presentation types `Γ` admits.
///
/// Type I (a surjection onto `Z^2` with nilpotent kernel) is decided
/// completely: for `k = 1` it holds iff `b1 >= 2`, witnessed by an invariant
/// functional `f` on the fiber and the map `(x, t) -> (f(x), t)`. Types II and
/// III for the other presentations are decided where a construction or an
/// obstruction is available and reported unknown otherwise.
pub fn wang_types(w: &WangExtension) -> TypeSet {
    let b1 = abelianization_rank(w);
    let mut reasons = Vec::new();
    let type_i = if w.k >= 2 {
        reasons.push(format!("I: given with k = {}", w.k));
        Membership::Yes
    } else if b1 >= 2 {
        reasons.push("I: an invariant functional on the fiber gives a surjection onto Z^2 with abelian kernel".into());
        Membership::Yes
    } else {
        reasons.push("I: b1 < 2, so there is no surjection onto Z^2".into());
        Membership::No
    };

    let (type_ii, type_iii) = match &w.monodromy {
        Monodromy::Abelian(a) => {
            reasons.push("II: given with abelian fiber and k = 1".into());
            let iii = if a.is_identity() {
                reasons.push("III: Γ is abelian".into());
                Membership::No
            } else if is_unipotent(a) {
                reasons.push("III: unipotent monodromy; the kernel of a map killing Im(A - I) is Λ_m".into());
                Membership::Yes
            } else if has_finite_order(a) {
                reasons.push("III: Γ is virtually abelian and cannot contain Λ_n".into());
                Membership::No
            } else if b1 == 1 {
                reasons.push("III: b1 = 1, the only fibration has abelian kernel".into());
                Membership::No
            } else {
                Membership::Unknown
            };
            (Membership::Yes, iii)
        }
        Monodromy::Heisenberg { b, eps, .. } => {
            reasons.push("III: given with fiber Λ_n and k = 1".into());
            let ii = if is_unipotent(b) && *eps == 1 {
                reasons.push("II: Γ is nilpotent of rank 4 and has a normal Z^3 with quotient Z".into());
                Membership::Yes
            } else if b1 == 1 {
                reasons.push("II: b1 = 1, the only fibration has kernel containing Λ_n".into());
                Membership::No
            } else {
                Membership::Unknown
            };
            (ii, Membership::Yes)
        }
        Monodromy::Commuting(ms) => {
            let ii = if w.k >= 3 {
                reasons.push("II: a saturated rank-2 sublattice of Z^k acts trivially on the fiber".into());
                Membership::Yes
            } else if let Some((p, q)) = trivial_direction(&ms[0], &ms[1]) {
                reasons.push(format!("II: A1^{p} A2^{q} = I along a primitive direction"));
                Membership::Yes
            } else {
                Membership::Unknown
            };
            let iii = if ms.iter().all(has_finite_order) {
                reasons.push("III: Γ is virtually abelian and cannot contain Λ_n".into());
                Membership::No
            } else {
                Membership::Unknown
            };
            (ii, iii)
        }
    };
    TypeSet {
        type_i,
        type_ii,
        type_iii,
        reasons,
    }
}

fn int_pow(m: &IntMatrix, e: i64) -> Option<IntMatrix> {
    if e >= 0 {
        return Some(m.pow(e as u32));
    }
    let inv = m.to_rational().inverse().ok()?;
    if !inv.entries().iter().all(|v| v.is_integer()) {
        return None;
    }
    Some(inv.map(|v| v.to_integer()).pow((-e) as u32))
}

/// Searches small primitive `(p, q)` with `A1^p A2^q = I`.
fn trivial_direction(a1: &IntMatrix, a2: &IntMatrix) -> Option<(i64, i64)> {
    use num_integer::Integer;
    let id = IntMatrix::identity(a1.rows());
    for bound in 0..=12i64 {
        for p in -bound..=bound {
            for q in -bound..=bound {
                if p.abs().max(q.abs()) != bound || p.gcd(&q) != 1 {
                    continue;
                }
                if let (Some(x), Some(y)) = (int_pow(a1, p), int_pow(a2, q)) {
                    if &x * &y == id {
                        return Some((p, q));
                    }
                }
            }
        }
    }
    None
}

/// Pulls the extension back along `mZ ⊂ Z`: monodromy `A^m`, center action `eps^m`.
pub fn power_reduction(w: &WangExtension, m: i64) -> Result<WangExtension, WangError> {
    if m <= 0 {
        return Err(WangError::InvalidPower(m));
    }
    let m = m as u32;
    match &w.monodromy {
        Monodromy::Abelian(a) => WangExtension::abelian(a.pow(m)),
        Monodromy::Heisenberg { b, eps, offsets } => {
            let Fiber::Heisenberg { n } = w.fiber else {
                unreachable!("Heisenberg monodromy has a Λ_n fiber")
            };
            let new_eps = if m.is_multiple_of(2) { 1 } else { *eps };
            // offsets of a power depend on the whole composite; keep them only for m = 1
            let offsets = if m == 1 { *offsets } else { None };
            WangExtension::heisenberg(n, b.pow(m), new_eps, offsets)
        }
        Monodromy::Commuting(_) => Err(WangError::NeedsRankOne),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn lambda_relations() {
        for n in 1..=10 {
            let [g1, g2, g3] = lambda_matrix_generators(n).unwrap();
            assert_eq!(commutator(&g1, &g2), g3.pow(n as u32));
            assert!(commutator(&g1, &g3).is_identity());
            assert!(commutator(&g2, &g3).is_identity());
        }
        let [_, _, g3] = lambda_matrix_generators(2).unwrap();
        assert_eq!(g3.get(0, 2), &BigRational::new(1.into(), 2.into()));
        assert!(lambda_matrix_generators(0).is_err());
    }

    #[test]
    fn b1_examples() {
        let torus = WangExtension::abelian(IntMatrix::identity(3)).unwrap();
        assert_eq!(abelianization_rank(&torus), 4);
        let pk = WangExtension::heisenberg(1, IntMatrix::identity(2), 1, None).unwrap();
        assert_eq!(abelianization_rank(&pk), 3);
        let sk = WangExtension::heisenberg(1, m(&[&[-1, 0], &[0, -1]]), 1, None).unwrap();
        assert_eq!(abelianization_rank(&sk), 1);
    }

    #[test]
    fn eps_must_match_det() {
        let err = WangExtension::heisenberg(2, m(&[&[1, 1], &[1, 0]]), 1, None).unwrap_err();
        assert!(matches!(err, WangError::EpsMismatch { eps: 1, .. }));
        assert!(WangExtension::heisenberg(2, m(&[&[1, 1], &[1, 0]]), -1, Some((3, -2))).is_ok());
    }

    #[test]
    fn types_of_examples() {
        let gamma_n = WangExtension::heisenberg(3, IntMatrix::identity(2), 1, None).unwrap();
        assert_eq!(wang_types(&gamma_n).members(), vec!["I", "II", "III"]);
        let s0 = WangExtension::abelian(m(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 1]])).unwrap();
        let t = wang_types(&s0);
        assert_eq!(t.members(), vec!["II"]);
        assert!(t.unknown().is_empty());
        let ex3 = WangExtension::commuting(vec![m(&[&[-1, 0], &[0, -1]]), m(&[&[1, 2], &[0, 1]])]).unwrap();
        assert_eq!(wang_types(&ex3).type_i, Membership::Yes);
        assert_eq!(abelianization_rank(&ex3), 2);
    }

    #[test]
    fn power_reduction_examples() {
        let w = WangExtension::heisenberg(1, m(&[&[2, 1], &[1, 1]]), 1, None).unwrap();
        let cube = power_reduction(&w, 3).unwrap();
        let Monodromy::Heisenberg { b, .. } = cube.monodromy() else {
            panic!()
        };
        assert_eq!(b, &m(&[&[13, 8], &[8, 5]]));
        assert_eq!(power_reduction(&w, 1).unwrap(), w);
        assert!(power_reduction(&w, 0).is_err());
        let minus = WangExtension::heisenberg(1, m(&[&[-1, 0], &[0, 1]]), -1, None).unwrap();
        let sq = power_reduction(&minus, 2).unwrap();
        assert!(matches!(sq.monodromy(), Monodromy::Heisenberg { eps: 1, .. }));
        let hyp = WangExtension::abelian(m(&[&[-1, 0, 0], &[0, -1, 0], &[0, 0, 1]])).unwrap();
        let Monodromy::Abelian(a2) = power_reduction(&hyp, 2).unwrap().monodromy().clone() else {
            panic!()
        };
        assert!(a2.is_identity());
    }

    #[test]
    fn json_round_trip() {
        let v = serde_json::json!({"fiber": {"Lambda": 2}, "k": 1,
            "monodromy": {"B": [[2, 1], [1, 1]], "eps": 1, "offsets": [0, 1]}});
        let w = WangExtension::from_json(&v).unwrap();
        assert_eq!(w.to_json(), v);
        let v = serde_json::json!({"fiber": "Z2", "k": 2,
            "monodromy": [[[-1, 0], [0, -1]], [[1, 1], [0, 1]]]});
        assert_eq!(WangExtension::from_json(&v).unwrap().to_json(), v);
        let bad = serde_json::json!({"fiber": "Z3", "k": 2, "monodromy": []});
        assert!(matches!(WangExtension::from_json(&bad), Err(WangError::InvalidRank(_))));
    }

    #[test]
    fn zero_rank_fiber() {
        let v = serde_json::json!({"fiber": "Z0", "k": 4, "monodromy": [[], [], [], []]});
        let w = WangExtension::from_json(&v).unwrap();
        assert_eq!(abelianization_rank(&w), 4);
    }
}
