use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::classify::{classify_type_ii, classify_type_iii, SurfaceClass};
use crate::exact::{Matrix, NumberField, NumberFieldElem, ZPoly};
use crate::IntMatrix;

use super::ModelError;

type K = NumberFieldElem;

fn int(v: &BigInt) -> K {
    K::rational(BigRational::from_integer(v.clone()))
}

fn small(v: i64) -> K {
    K::rational(BigRational::from_integer(v.into()))
}

fn elem_json(x: &K) -> Value {
    json!(x.coords().iter().map(crate::rational_string).collect::<Vec<_>>())
}

/// `re + im·ω` with `ω² = delta < 0`, so the imaginary part is `im·sqrt(-delta)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: K,
    pub im: K,
    delta: K,
}

impl Complex {
    pub fn real(re: K, delta: &K) -> Self {
        Complex {
            re,
            im: K::zero(),
            delta: delta.clone(),
        }
    }

    pub fn delta(&self) -> &K {
        &self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Complex {
            re: self.re.clone() + o.re.clone(),
            im: self.im.clone() + o.im.clone(),
            delta: self.delta.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Complex {
            re: -self.re.clone(),
            im: -self.im.clone(),
            delta: self.delta.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Complex {
            re: self.re.clone() * o.re.clone() + self.im.clone() * o.im.clone() * self.delta.clone(),
            im: self.re.clone() * o.im.clone() + self.im.clone() * o.re.clone(),
            delta: self.delta.clone(),
        }
    }

    pub fn scale(&self, k: &K) -> Self {
        Complex {
            re: self.re.clone() * k.clone(),
            im: self.im.clone() * k.clone(),
            delta: self.delta.clone(),
        }
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: -self.im.clone(),
            delta: self.delta.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self, ModelError> {
        let norm = self.mul(&self.conj()).re;
        Ok(self.conj().scale(&norm.try_inverse()?))
    }

    fn to_json(&self) -> Value {
        json!({"re": elem_json(&self.re), "im": elem_json(&self.im)})
    }
}

/// `(z1, z2) ↦ (s1·z1 + t1, s2·z2 + t2)` with real `s2 > 0` and real `t2`, so
/// the second factor acts on the upper half-plane.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineGenerator {
    pub label: String,
    pub scale: (Complex, K),
    pub translation: (Complex, K),
}

impl AffineGenerator {
    /// `self ∘ other`
    pub fn compose(&self, other: &Self) -> Self {
        AffineGenerator {
            label: format!("{}{}", self.label, other.label),
            scale: (
                self.scale.0.mul(&other.scale.0),
                self.scale.1.clone() * other.scale.1.clone(),
            ),
            translation: (
                self.scale.0.mul(&other.translation.0).add(&self.translation.0),
                self.scale.1.clone() * other.translation.1.clone() + self.translation.1.clone(),
            ),
        }
    }

    pub fn inverse(&self) -> Result<Self, ModelError> {
        let s1 = self.scale.0.inverse()?;
        let s2 = self.scale.1.try_inverse()?;
        Ok(AffineGenerator {
            label: format!("{}^-1", self.label),
            translation: (
                s1.mul(&self.translation.0).neg(),
                -(s2.clone() * self.translation.1.clone()),
            ),
            scale: (s1, s2),
        })
    }

    /// Same action; labels are ignored.
    pub fn same_map(&self, other: &Self) -> bool {
        self.scale == other.scale && self.translation == other.translation
    }

    pub fn preserves_upper_half_plane(&self) -> Result<bool, ModelError> {
        Ok(self.scale.1.is_positive()?)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "scale": [self.scale.0.to_json(), elem_json(&self.scale.1)],
            "translation": [self.translation.0.to_json(), elem_json(&self.translation.1)],
        })
    }
}

fn cross<T: Clone>(u: &[T], v: &[T], mul: impl Fn(&T, &T) -> T, sub: impl Fn(&T, &T) -> T) -> Vec<T> {
    vec![
        sub(&mul(&u[1], &v[2]), &mul(&u[2], &v[1])),
        sub(&mul(&u[2], &v[0]), &mul(&u[0], &v[2])),
        sub(&mul(&u[0], &v[1]), &mul(&u[1], &v[0])),
    ]
}

/// Kernel vector of a rank-2 3×3 matrix as a cross product of two rows.
fn kernel_by_cross<T: Clone>(
    rows: &[Vec<T>],
    mul: impl Fn(&T, &T) -> T + Copy,
    sub: impl Fn(&T, &T) -> T + Copy,
    is_zero: impl Fn(&T) -> bool,
) -> Option<Vec<T>> {
    [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| cross(&rows[i], &rows[j], mul, sub))
        .find(|v| !v.iter().all(&is_zero))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentConvention {
    /// `g0 gi g0^-1 = Π g_j^{a_ij}`
    Rows,
    /// `g0 gi g0^-1 = Π g_j^{a_ji}`
    Columns,
}

impl ExponentConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExponentConvention::Rows => "rows",
            ExponentConvention::Columns => "columns",
        }
    }
}

#[derive(Clone, Debug)]
pub struct S0Report {
    pub field: Arc<NumberField>,
    /// The real eigenvalue `c`, the generator of the field.
    pub c: K,
    pub alpha: Complex,
    pub generators: Vec<AffineGenerator>,
    pub c_greater_than_one: bool,
    pub independent: bool,
    pub conventions: Vec<(ExponentConvention, bool)>,
    pub translations_commute: bool,
    pub verified: bool,
}

impl S0Report {
    pub fn holding_conventions(&self) -> Vec<ExponentConvention> {
        self.conventions.iter().filter(|(_, ok)| *ok).map(|(c, _)| *c).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "min_poly": self.field.min_poly().to_string(),
            "c": elem_json(&self.c),
            "omega_squared": elem_json(self.alpha.delta()),
            "alpha": self.alpha.to_json(),
            "generators": self.generators.iter().map(|g| g.to_json()).collect::<Vec<_>>(),
            "c_greater_than_one": self.c_greater_than_one,
            "independent": self.independent,
            "conventions": self.conventions.iter()
                .map(|(c, ok)| json!({"convention": c.as_str(), "holds": ok}))
                .collect::<Vec<_>>(),
            "translations_commute": self.translations_commute,
            "verified": self.verified,
        })
    }
}

fn translation(label: &str, t: (Complex, K)) -> AffineGenerator {
    let delta = t.0.delta().clone();
    AffineGenerator {
        label: label.to_string(),
        scale: (Complex::real(K::one(), &delta), K::one()),
        translation: t,
    }
}

fn power(g: &AffineGenerator, e: i64) -> Result<AffineGenerator, ModelError> {
    let base = if e < 0 { g.inverse()? } else { g.clone() };
    let delta = g.scale.0.delta().clone();
    let mut acc = AffineGenerator {
        label: String::new(),
        scale: (Complex::real(K::one(), &delta), K::one()),
        translation: (Complex::real(K::zero(), &delta), K::zero()),
    };
    for _ in 0..e.unsigned_abs() {
        acc = acc.compose(&base);
    }
    Ok(acc)
}

/// Generators `g0: (z1, z2) ↦ (α z1, c z2)` and `gi: (z1, z2) ↦ (z1 + αi, z2 + ci)`
/// for a monodromy of Inoue type `S^0`, with every relation checked in
/// `Q(c)(sqrt(Δ))`, `Δ = (tr A - c)^2 - 4/c`.
pub fn inoue_s0_generators(a: &IntMatrix) -> Result<S0Report, ModelError> {
    let report = classify_type_ii(a)?;
    if report.class != SurfaceClass::InoueS0 {
        return Err(ModelError::Precondition(format!(
            "monodromy classifies as {}, not InoueS0",
            report.class.tag()
        )));
    }
    let cp: ZPoly = a.char_poly()?;
    let field = NumberField::largest_real(&cp)?;
    let c = field.generator();
    let am: Matrix<K> = a.map(int);
    let trace = int(&a.trace());

    // eigenvector of c
    let rows: Vec<Vec<K>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| am.get(i, j).clone() - if i == j { c.clone() } else { K::zero() })
                .collect()
        })
        .collect();
    let w = kernel_by_cross(
        &rows,
        |x, y| x.clone() * y.clone(),
        |x, y| x.clone() - y.clone(),
        K::is_zero,
    )
    .ok_or_else(|| ModelError::Verification("A - cI has rank below 2".into()))?;

    let half = K::rational(BigRational::new(1.into(), 2.into()));
    let s = trace.clone() - c.clone();
    let delta = s.clone() * s.clone() - small(4) * c.try_inverse()?;
    if !delta.is_negative()? {
        return Err(ModelError::Verification(
            "complementary eigenvalues are not a conjugate pair".into(),
        ));
    }
    let alpha = Complex {
        re: s * half.clone(),
        im: half,
        delta: delta.clone(),
    };
    let crow: Vec<Vec<Complex>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    let e = Complex::real(am.get(i, j).clone(), &delta);
                    if i == j {
                        e.sub(&alpha)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    let v = kernel_by_cross(&crow, |x, y| x.mul(y), |x, y| x.sub(y), Complex::is_zero)
        .ok_or_else(|| ModelError::Verification("A - αI has rank below 2".into()))?;

    let av: Vec<Complex> = (0..3)
        .map(|i| {
            (0..3).fold(Complex::real(K::zero(), &delta), |acc, j| {
                acc.add(&v[j].scale(am.get(i, j)))
            })
        })
        .collect();
    let aw: Vec<K> = (0..3)
        .map(|i| (0..3).fold(K::zero(), |acc, j| acc + am.get(i, j).clone() * w[j].clone()))
        .collect();
    let eigen_ok = (0..3).all(|i| av[i] == alpha.mul(&v[i]) && aw[i] == c.clone() * w[i].clone());
    if !eigen_ok {
        return Err(ModelError::Verification("eigenvector equations fail".into()));
    }

    let g0 = AffineGenerator {
        label: "g0".into(),
        scale: (alpha.clone(), c.clone()),
        translation: (Complex::real(K::zero(), &delta), K::zero()),
    };
    let gs: Vec<AffineGenerator> = (0..3)
        .map(|i| translation(&format!("g{}", i + 1), (v[i].clone(), w[i].clone())))
        .collect();

    let g0_inv = g0.inverse()?;
    let mut conventions = Vec::new();
    for conv in [ExponentConvention::Rows, ExponentConvention::Columns] {
        let mut holds = true;
        for i in 0..3 {
            let lhs = g0.compose(&gs[i]).compose(&g0_inv);
            let mut rhs = power(&gs[0], 0)?;
            for (j, gj) in gs.iter().enumerate() {
                let e = match conv {
                    ExponentConvention::Rows => a.get(i, j),
                    ExponentConvention::Columns => a.get(j, i),
                };
                let e = e
                    .to_i64()
                    .ok_or_else(|| ModelError::InvalidParameter("entry too large".into()))?;
                rhs = rhs.compose(&power(gj, e)?);
            }
            holds &= lhs.same_map(&rhs);
        }
        conventions.push((conv, holds));
    }

    let translations_commute = (0..3).all(|i| (0..3).all(|j| gs[i].compose(&gs[j]).same_map(&gs[j].compose(&gs[i]))));
    // (Re αi, Im αi / sqrt(-Δ), ci) must be independent over R
    let m = Matrix::from_rows(
        (0..3)
            .map(|i| vec![v[i].re.clone(), v[i].im.clone(), w[i].clone()])
            .collect(),
    )?;
    let independent = !m.det()?.is_zero();
    let c_greater_than_one = c.cmp_rational(&BigRational::one())? == std::cmp::Ordering::Greater;
    let upper = g0.preserves_upper_half_plane()?;

    let mut generators = vec![g0];
    generators.extend(gs);
    let verified = conventions.iter().any(|(_, ok)| *ok) && translations_commute && independent && upper;
    Ok(S0Report {
        field,
        c,
        alpha,
        generators,
        c_greater_than_one,
        independent,
        conventions,
        translations_commute,
        verified,
    })
}

/// Element `(x, y, z)` of the Heisenberg group, matrix `[[1, x, z], [0, 1, y], [0, 0, 1]]`.
#[derive(Clone, Debug, PartialEq)]
struct Heis {
    x: K,
    y: K,
    z: K,
}

impl Heis {
    fn identity() -> Self {
        Heis {
            x: K::zero(),
            y: K::zero(),
            z: K::zero(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        Heis {
            x: self.x.clone() + o.x.clone(),
            y: self.y.clone() + o.y.clone(),
            z: self.z.clone() + o.z.clone() + self.x.clone() * o.y.clone(),
        }
    }

    fn inverse(&self) -> Self {
        Heis {
            x: -self.x.clone(),
            y: -self.y.clone(),
            z: self.x.clone() * self.y.clone() - self.z.clone(),
        }
    }

    fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Heis::identity(), |acc, _| acc.mul(&base))
    }

    fn to_json(&self) -> Value {
        json!([elem_json(&self.x), elem_json(&self.y), elem_json(&self.z)])
    }
}

#[derive(Clone, Debug)]
pub struct SpmSolution {
    pub n: u32,
    pub eps: i64,
    pub field: Arc<NumberField>,
    /// Eigenvalues with `a > b`; `(a1, a2)` and `(b1, b2)` are their eigenvectors.
    pub a: K,
    pub b: K,
    pub a_vec: (K, K),
    pub b_vec: (K, K),
    pub c1: K,
    pub c2: K,
    pub c3: K,
    pub k_off: i64,
    pub l_off: i64,
    pub gamma: (BigRational, BigRational),
    pub commutator_ok: bool,
    pub action_ok: bool,
}

impl SpmSolution {
    pub fn verified(&self) -> bool {
        self.commutator_ok && self.action_ok
    }

    pub fn generators(&self) -> [(K, K, K); 3] {
        [
            (self.a_vec.0.clone(), self.b_vec.0.clone(), self.c1.clone()),
            (self.a_vec.1.clone(), self.b_vec.1.clone(), self.c2.clone()),
            (K::zero(), K::zero(), self.c3.clone()),
        ]
    }

    pub fn to_json(&self) -> Value {
        let g: Vec<Value> = self
            .generators()
            .iter()
            .map(|(x, y, z)| {
                Heis {
                    x: x.clone(),
                    y: y.clone(),
                    z: z.clone(),
                }
                .to_json()
            })
            .collect();
        json!({
            "n": self.n,
            "eps": self.eps,
            "min_poly": self.field.min_poly().to_string(),
            "a": elem_json(&self.a),
            "b": elem_json(&self.b),
            "c1": elem_json(&self.c1),
            "c2": elem_json(&self.c2),
            "c3": elem_json(&self.c3),
            "k_off": self.k_off,
            "l_off": self.l_off,
            "gamma": [crate::rational_string(&self.gamma.0), crate::rational_string(&self.gamma.1)],
            "generators": g,
            "commutator_ok": self.commutator_ok,
            "action_ok": self.action_ok,
            "verified": self.verified(),
        })
    }
}

/// Default search bound for the central offsets `k`, `l`.
pub const SPM_OFFSET_RANGE: i64 = 10;

fn offsets(range: i64) -> Vec<(i64, i64)> {
    let mut v: Vec<(i64, i64)> = (-range..=range)
        .flat_map(|k| (-range..=range).map(move |l| (k, l)))
        .collect();
    v.sort_by_key(|&(k, l)| (k.abs() + l.abs(), k.abs(), k < 0, l.abs(), l < 0));
    v
}

/// Solves `[g1, g2] = g3^n` and `φ(g1) = g1^{n11} g2^{n12} g3^k`,
/// `φ(g2) = g1^{n21} g2^{n22} g3^l` in `Q(sqrt(D))`, where `φ(x, y, z) =
/// (a x, b y, eps z)`, then re-checks both conditions with the group law.
pub fn inoue_spm_solve(
    n: u32,
    b: &IntMatrix,
    eps: i64,
    gamma: (BigRational, BigRational),
) -> Result<SpmSolution, ModelError> {
    inoue_spm_solve_in_range(n, b, eps, gamma, SPM_OFFSET_RANGE)
}

pub fn inoue_spm_solve_in_range(
    n: u32,
    bm: &IntMatrix,
    eps: i64,
    gamma: (BigRational, BigRational),
    range: i64,
) -> Result<SpmSolution, ModelError> {
    let report = classify_type_iii(n, bm, eps)?;
    match report.class {
        SurfaceClass::InoueSPlus => {}
        SurfaceClass::InoueSMinus => {
            if !gamma.0.is_zero() || !gamma.1.is_zero() {
                return Err(ModelError::Precondition("gamma must be 0 for S^-".into()));
            }
        }
        other => {
            return Err(ModelError::Precondition(format!(
                "extension classifies as {}, not InoueSPlus or InoueSMinus",
                other.tag()
            )))
        }
    }
    let entry = |i: usize, j: usize| bm.get(i, j).to_i64().expect("classified matrices are small");
    let (n11, n12, n21, n22) = (entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1));
    let t = n11 + n22;
    let det = n11 * n22 - n12 * n21;
    let disc = t * t - 4 * det;
    let field = NumberField::largest_real(&ZPoly::from_i64s(&[-disc, 0, 1]))?;
    let root = field.generator();
    let half = K::rational(BigRational::new(1.into(), 2.into()));
    let a = (small(t) + root.clone()) * half.clone();
    let b = (small(t) - root) * half;
    let eigvec = |lam: &K| -> (K, K) {
        if n12 != 0 {
            (small(n12), lam.clone() - small(n11))
        } else {
            (lam.clone() - small(n22), small(n21))
        }
    };
    let (a1, a2) = eigvec(&a);
    let (b1, b2) = eigvec(&b);
    let c3 = (a1.clone() * b2.clone() - a2.clone() * b1.clone()) * K::rational(BigRational::new(1.into(), n.into()));
    if c3.is_zero() {
        return Err(ModelError::Verification("eigenvectors are dependent".into()));
    }

    // z-parts with c1 = c2 = 0 give the constant terms of the linear system
    let h1 = Heis {
        x: a1.clone(),
        y: b1.clone(),
        z: K::zero(),
    };
    let h2 = Heis {
        x: a2.clone(),
        y: b2.clone(),
        z: K::zero(),
    };
    let r1 = h1.pow(n11).mul(&h2.pow(n12)).z;
    let r2 = h1.pow(n21).mul(&h2.pow(n22)).z;
    // (eps I - N) (c1, c2) = (r1 + k c3, r2 + l c3)
    let m = [[small(eps - n11), small(-n12)], [small(-n21), small(eps - n22)]];
    let mdet = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();

    let mut found = None;
    for (k, l) in offsets(range) {
        let rhs = [r1.clone() + small(k) * c3.clone(), r2.clone() + small(l) * c3.clone()];
        if !mdet.is_zero() {
            let inv = mdet.try_inverse()?;
            let c1 = (rhs[0].clone() * m[1][1].clone() - m[0][1].clone() * rhs[1].clone()) * inv.clone();
            let c2 = (m[0][0].clone() * rhs[1].clone() - rhs[0].clone() * m[1][0].clone()) * inv;
            found = Some((k, l, c1, c2));
            break;
        }
        if let Some((c1, c2)) = solve_singular(&m, &rhs)? {
            found = Some((k, l, c1, c2));
            break;
        }
    }
    let (k_off, l_off, c1, c2) = found.ok_or(ModelError::SolverRange { range })?;

    let g1 = Heis {
        x: a1.clone(),
        y: b1.clone(),
        z: c1.clone(),
    };
    let g2 = Heis {
        x: a2.clone(),
        y: b2.clone(),
        z: c2.clone(),
    };
    let g3 = Heis {
        x: K::zero(),
        y: K::zero(),
        z: c3.clone(),
    };
    let phi = |g: &Heis| Heis {
        x: a.clone() * g.x.clone(),
        y: b.clone() * g.y.clone(),
        z: small(eps) * g.z.clone(),
    };
    let commutator = g1.mul(&g2).mul(&g1.inverse()).mul(&g2.inverse());
    let commutator_ok = commutator == g3.pow(n as i64);
    let action_ok = phi(&g1) == g1.pow(n11).mul(&g2.pow(n12)).mul(&g3.pow(k_off))
        && phi(&g2) == g1.pow(n21).mul(&g2.pow(n22)).mul(&g3.pow(l_off));

    Ok(SpmSolution {
        n,
        eps,
        field,
        a,
        b,
        a_vec: (a1, a2),
        b_vec: (b1, b2),
        c1,
        c2,
        c3,
        k_off,
        l_off,
        gamma,
        commutator_ok,
        action_ok,
    })
}

/// Some solution of a singular 2×2 system, or `None` when inconsistent.
fn solve_singular(m: &[[K; 2]; 2], rhs: &[K; 2]) -> Result<Option<(K, K)>, ModelError> {
    // pick a nonzero row as the pivot row
    let Some(r) = (0..2).find(|&r| !m[r][0].is_zero() || !m[r][1].is_zero()) else {
        return Ok((rhs[0].is_zero() && rhs[1].is_zero()).then(|| (K::zero(), K::zero())));
    };
    let (c1, c2) = if !m[r][0].is_zero() {
        (rhs[r].clone() * m[r][0].try_inverse()?, K::zero())
    } else {
        (K::zero(), rhs[r].clone() * m[r][1].try_inverse()?)
    };
    let o = 1 - r;
    let ok = m[o][0].clone() * c1.clone() + m[o][1].clone() * c2.clone() == rhs[o];
    Ok(ok.then_some((c1, c2)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn companion(c: &[i64]) -> IntMatrix {
        IntMatrix::companion(&ZPoly::from_i64s(c)).unwrap()
    }

    fn zero2() -> (BigRational, BigRational) {
        (BigRational::zero(), BigRational::zero())
    }

    #[test]
    fn s0_relations_hold_in_cubic_field() {
        let r = inoue_s0_generators(&companion(&[-1, 0, -1, 1])).unwrap();
        assert!(r.verified);
        assert!(r.c_greater_than_one);
        assert_eq!(r.field.degree(), 3);
        assert_eq!(r.generators.len(), 4);
        assert!(r.holding_conventions().contains(&ExponentConvention::Rows));
    }

    #[test]
    fn s0_rejects_other_classes() {
        let e = inoue_s0_generators(&IntMatrix::identity(3)).unwrap_err();
        assert!(matches!(e, ModelError::Precondition(_)));
    }

    #[test]
    fn affine_inverse_round_trip() {
        let r = inoue_s0_generators(&companion(&[-1, -1, 0, 1])).unwrap();
        for g in &r.generators {
            let id = g.compose(&g.inverse().unwrap());
            assert!(id.same_map(&power(g, 0).unwrap()));
        }
    }

    #[test]
    fn spm_plus_conditions_hold() {
        let b = IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
        let s = inoue_spm_solve(1, &b, 1, zero2()).unwrap();
        assert!(s.verified());
        assert_eq!((s.k_off, s.l_off), (0, 0));
        assert_eq!(s.field.degree(), 2);
        let s3 = inoue_spm_solve(3, &b, 1, zero2()).unwrap();
        assert!(s3.verified());
        assert_eq!(s3.c3.clone() * small(3), s.c3);
    }

    #[test]
    fn spm_minus_forces_gamma_zero() {
        let b = IntMatrix::from_i64_rows(&[&[1, 1], &[1, 0]]);
        assert!(inoue_spm_solve(1, &b, -1, zero2()).unwrap().verified());
        let gamma = (BigRational::one(), BigRational::zero());
        assert!(matches!(
            inoue_spm_solve(1, &b, -1, gamma),
            Err(ModelError::Precondition(_))
        ));
    }

    #[test]
    fn spm_rejects_non_inoue() {
        let e = inoue_spm_solve(1, &IntMatrix::identity(2), 1, zero2()).unwrap_err();
        assert!(matches!(e, ModelError::Precondition(_)));
    }

    #[test]
    fn offsets_prefer_small_nonnegative() {
        let o = offsets(1);
        assert_eq!(&o[..3], &[(0, 0), (0, 1), (0, -1)]);
        assert_eq!(o[3], (1, 0));
    }
}
