//! Decision procedure from monodromy data to surface class.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::exact::{spectral_profile, ExactError, RootSign, SpectralProfile};
use crate::wang::{abelianization_rank, WangError, WangExtension};
use crate::{rational_string, IntMatrix};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("type II monodromy must lie in SL(3,Z); det = {0}")]
    NotSl3(String),
    #[error("multiplicity {0} is below 2")]
    InvalidMultiplicity(i64),
    #[error("only k = 1 extensions are classified")]
    Unsupported,
    #[error(transparent)]
    Wang(#[from] WangError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Rotation angle of a finite-order monodromy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Eta {
    Pi,
    TwoPiOverThree,
    PiOverTwo,
    PiOverThree,
}

impl Eta {
    pub const ALL: [Eta; 4] = [Eta::Pi, Eta::TwoPiOverThree, Eta::PiOverTwo, Eta::PiOverThree];

    /// From the order of `e^{i eta}` as a root of unity.
    pub fn from_order(order: u32) -> Option<Eta> {
        match order {
            2 => Some(Eta::Pi),
            3 => Some(Eta::TwoPiOverThree),
            4 => Some(Eta::PiOverTwo),
            6 => Some(Eta::PiOverThree),
            _ => None,
        }
    }

    pub fn order(self) -> u32 {
        match self {
            Eta::Pi => 2,
            Eta::TwoPiOverThree => 3,
            Eta::PiOverTwo => 4,
            Eta::PiOverThree => 6,
        }
    }

    /// `eta / pi`
    pub fn over_pi(self) -> BigRational {
        let (n, d) = match self {
            Eta::Pi => (1, 1),
            Eta::TwoPiOverThree => (2, 3),
            Eta::PiOverTwo => (1, 2),
            Eta::PiOverThree => (1, 3),
        };
        BigRational::new(n.into(), d.into())
    }

    /// Trace of the rotation `e^{i eta}` acting on `R^2`.
    pub fn trace(self) -> i64 {
        match self {
            Eta::Pi => -2,
            Eta::TwoPiOverThree => -1,
            Eta::PiOverTwo => 0,
            Eta::PiOverThree => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Eta::Pi => "pi",
            Eta::TwoPiOverThree => "2pi/3",
            Eta::PiOverTwo => "pi/2",
            Eta::PiOverThree => "pi/3",
        }
    }

    pub fn parse(s: &str) -> Option<Eta> {
        Eta::ALL.into_iter().find(|e| e.as_str() == s)
    }
}

impl fmt::Display for Eta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Eta {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceClass {
    ComplexTorus,
    Hyperelliptic(Eta),
    InoueS0,
    PrimaryKodaira,
    SecondaryKodaira(Eta),
    InoueSPlus,
    InoueSMinus,
    NilmanifoldB2,
    T2BundleRealRoots,
    T3BundleRealRoots,
    OtherNotEnumerated,
}

impl SurfaceClass {
    pub fn tag(&self) -> &'static str {
        match self {
            SurfaceClass::ComplexTorus => "ComplexTorus",
            SurfaceClass::Hyperelliptic(_) => "Hyperelliptic",
            SurfaceClass::InoueS0 => "InoueS0",
            SurfaceClass::PrimaryKodaira => "PrimaryKodaira",
            SurfaceClass::SecondaryKodaira(_) => "SecondaryKodaira",
            SurfaceClass::InoueSPlus => "InoueSPlus",
            SurfaceClass::InoueSMinus => "InoueSMinus",
            SurfaceClass::NilmanifoldB2 => "NilmanifoldB2",
            SurfaceClass::T2BundleRealRoots => "T2BundleRealRoots",
            SurfaceClass::T3BundleRealRoots => "T3BundleRealRoots",
            SurfaceClass::OtherNotEnumerated => "OtherNotEnumerated",
        }
    }

    pub fn eta(&self) -> Option<Eta> {
        match self {
            SurfaceClass::Hyperelliptic(e) | SurfaceClass::SecondaryKodaira(e) => Some(*e),
            _ => None,
        }
    }

    /// One of the six complex surface classes.
    pub fn admits_complex(&self) -> bool {
        matches!(
            self,
            SurfaceClass::ComplexTorus
                | SurfaceClass::Hyperelliptic(_)
                | SurfaceClass::InoueS0
                | SurfaceClass::PrimaryKodaira
                | SurfaceClass::SecondaryKodaira(_)
                | SurfaceClass::InoueSPlus
                | SurfaceClass::InoueSMinus
        )
    }

    pub fn kodaira_dimension(&self) -> KodairaDimension {
        match self {
            SurfaceClass::ComplexTorus
            | SurfaceClass::Hyperelliptic(_)
            | SurfaceClass::PrimaryKodaira
            | SurfaceClass::SecondaryKodaira(_) => KodairaDimension::Zero,
            SurfaceClass::InoueS0 | SurfaceClass::InoueSPlus | SurfaceClass::InoueSMinus => {
                KodairaDimension::MinusInfinity
            }
            _ => KodairaDimension::NotApplicable,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "class": self.tag(), "eta": self.eta() })
    }
}

/// A solvmanifold admits a Kähler structure iff it is a complex torus or a
/// hyperelliptic surface.
pub fn admits_kaehler(c: &SurfaceClass) -> bool {
    matches!(c, SurfaceClass::ComplexTorus | SurfaceClass::Hyperelliptic(_))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KodairaDimension {
    MinusInfinity,
    Zero,
    One,
    NotApplicable,
}

impl KodairaDimension {
    pub fn as_str(self) -> &'static str {
        match self {
            KodairaDimension::MinusInfinity => "-inf",
            KodairaDimension::Zero => "0",
            KodairaDimension::One => "1",
            KodairaDimension::NotApplicable => "n/a",
        }
    }
}

impl Serialize for KodairaDimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverHint {
    pub m: u32,
    pub class: SurfaceClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub class: SurfaceClass,
    pub b1: usize,
    pub admits_complex: bool,
    pub admits_kaehler: bool,
    pub kodaira_dimension: KodairaDimension,
    pub witness: String,
    pub finite_cover_hint: Option<CoverHint>,
}

impl ClassificationReport {
    fn new(class: SurfaceClass, b1: usize, witness: String, hint: Option<CoverHint>) -> Self {
        ClassificationReport {
            class,
            b1,
            admits_complex: class.admits_complex(),
            admits_kaehler: admits_kaehler(&class),
            kodaira_dimension: class.kodaira_dimension(),
            witness,
            finite_cover_hint: hint,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.tag(),
            "eta": self.class.eta(),
            "b1": self.b1,
            "admits_complex": self.admits_complex,
            "admits_kaehler": self.admits_kaehler,
            "kodaira_dimension": self.kodaira_dimension,
            "witness": self.witness,
            "finite_cover_hint": self.finite_cover_hint.as_ref().map(|h| json!({
                "m": h.m,
                "class": h.class.tag(),
                "eta": h.class.eta(),
            })),
        })
    }

    /// Equality of everything but the witness text.
    pub fn same_verdict(&self, other: &Self) -> bool {
        self.class == other.class
            && self.b1 == other.b1
            && self.admits_complex == other.admits_complex
            && self.admits_kaehler == other.admits_kaehler
            && self.kodaira_dimension == other.kodaira_dimension
            && self.finite_cover_hint == other.finite_cover_hint
    }
}

fn describe(p: &SpectralProfile) -> String {
    let factors: Vec<String> = p
        .factored
        .factors
        .iter()
        .map(|(f, m)| {
            if *m == 1 {
                format!("({f})")
            } else {
                format!("({f})^{m}")
            }
        })
        .collect();
    let roots: Vec<String> = p
        .real_roots
        .iter()
        .map(|r| {
            let iv = &r.interval;
            let body = if iv.is_exact() {
                rational_string(&iv.lo)
            } else {
                format!("({}, {})", rational_string(&iv.lo), rational_string(&iv.hi))
            };
            if r.multiplicity > 1 {
                format!("{body} x{}", r.multiplicity)
            } else {
                body
            }
        })
        .collect();
    format!(
        "char poly {} = {}; real roots [{}]; complex pairs {}; dim ker(M - I) = {}; dim ker(M + I) = {}",
        p.char_poly,
        factors.join(""),
        roots.join(", "),
        p.complex_pairs.len(),
        p.eigenspace_rank_at_1,
        p.eigenspace_rank_at_minus_1
    )
}

fn hint_from(m: u32, report: &ClassificationReport) -> Option<CoverHint> {
    match report.class {
        SurfaceClass::OtherNotEnumerated => report.finite_cover_hint.as_ref().map(|h| CoverHint {
            m: m * h.m,
            class: h.class,
        }),
        class => Some(CoverHint { m, class }),
    }
}

/// Classifies a type II extension `Z^3 ⋊_A Z` with `A` in `SL(3, Z)`.
pub fn classify_type_ii(a: &IntMatrix) -> Result<ClassificationReport, ClassifyError> {
    let w = WangExtension::abelian(a.clone())?;
    let det = a.det()?;
    if !det.is_one() {
        return Err(ClassifyError::NotSl3(det.to_string()));
    }
    let p = spectral_profile(a)?;
    let b1 = abelianization_rank(&w);
    let witness = describe(&p);
    let one = p.multiplicity_of_one();
    let minus_one = p.multiplicity_of_minus_one();

    let power_hint =
        |m: u32| -> Result<Option<CoverHint>, ClassifyError> { Ok(hint_from(m, &classify_type_ii(&a.pow(m))?)) };

    let report = if p.is_identity {
        ClassificationReport::new(SurfaceClass::ComplexTorus, b1, witness, None)
    } else if p.is_unipotent {
        let class = if p.eigenspace_rank_at_1 == 2 {
            SurfaceClass::PrimaryKodaira
        } else {
            SurfaceClass::NilmanifoldB2
        };
        ClassificationReport::new(class, b1, witness, None)
    } else if one == 1 {
        if minus_one == 2 {
            if p.eigenspace_rank_at_minus_1 == 2 {
                ClassificationReport::new(SurfaceClass::Hyperelliptic(Eta::Pi), b1, witness, None)
            } else {
                let hint = power_hint(2)?;
                ClassificationReport::new(SurfaceClass::OtherNotEnumerated, b1, witness, hint)
            }
        } else if let Some(pair) = p.complex_pairs.first() {
            let eta = pair
                .root_of_unity_order
                .and_then(Eta::from_order)
                .expect("a unimodular pair next to the root 1 lies on the unit circle");
            ClassificationReport::new(SurfaceClass::Hyperelliptic(eta), b1, witness, None)
        } else if p.real_roots.iter().all(|r| r.sign == RootSign::Positive) {
            ClassificationReport::new(SurfaceClass::T2BundleRealRoots, b1, witness, None)
        } else {
            let hint = power_hint(2)?;
            ClassificationReport::new(SurfaceClass::OtherNotEnumerated, b1, witness, hint)
        }
    } else if !p.complex_pairs.is_empty() {
        ClassificationReport::new(SurfaceClass::InoueS0, b1, witness, None)
    } else if p.real_roots.iter().all(|r| r.sign == RootSign::Positive) {
        ClassificationReport::new(SurfaceClass::T3BundleRealRoots, b1, witness, None)
    } else {
        let hint = power_hint(2)?;
        ClassificationReport::new(SurfaceClass::OtherNotEnumerated, b1, witness, hint)
    };
    Ok(report)
}

/// Classifies a type III extension `Λ_n ⋊ Z` from the induced action `B` on
/// `Λ_n / Z` and the action `eps` on the center.
pub fn classify_type_iii(n: u32, b: &IntMatrix, eps: i64) -> Result<ClassificationReport, ClassifyError> {
    classify_heisenberg(&WangExtension::heisenberg(n, b.clone(), eps, None)?)
}

fn classify_heisenberg(w: &WangExtension) -> Result<ClassificationReport, ClassifyError> {
    let crate::wang::Monodromy::Heisenberg { b, .. } = w.monodromy() else {
        return Err(ClassifyError::Unsupported);
    };
    let b1 = abelianization_rank(w);
    let p = spectral_profile(b)?;
    let witness = format!("eps = {}; {}", p.det, describe(&p));
    let det = p.det.to_i64().expect("unimodular");
    let trace = b.trace();
    let t = trace.to_i64();
    let minus_id = -&IntMatrix::identity(2);
    let sq_hint = |class| Some(CoverHint { m: 2, class });

    let (class, hint) = if p.is_identity {
        (SurfaceClass::PrimaryKodaira, None)
    } else if p.is_unipotent {
        (SurfaceClass::NilmanifoldB2, None)
    } else if det == 1 {
        if *b == minus_id {
            (SurfaceClass::SecondaryKodaira(Eta::Pi), None)
        } else {
            match t {
                Some(t @ -1..=1) => {
                    let order = crate::exact::quadratic_unit_circle(t, 1).expect("|t| <= 2");
                    (
                        SurfaceClass::SecondaryKodaira(Eta::from_order(order).expect("order")),
                        None,
                    )
                }
                Some(-2) => (SurfaceClass::OtherNotEnumerated, sq_hint(SurfaceClass::NilmanifoldB2)),
                _ if trace > BigInt::from(2) => (SurfaceClass::InoueSPlus, None),
                _ => (SurfaceClass::OtherNotEnumerated, sq_hint(SurfaceClass::InoueSPlus)),
            }
        }
    } else if trace.is_zero() {
        (SurfaceClass::OtherNotEnumerated, sq_hint(SurfaceClass::PrimaryKodaira))
    } else {
        (SurfaceClass::InoueSMinus, None)
    };
    Ok(ClassificationReport::new(class, b1, witness, hint))
}

/// Dispatches on the presentation: abelian fiber to type II, `Λ_n` to type III.
pub fn classify(w: &WangExtension) -> Result<ClassificationReport, ClassifyError> {
    match w.monodromy() {
        crate::wang::Monodromy::Abelian(a) => classify_type_ii(a),
        crate::wang::Monodromy::Heisenberg { .. } => classify_heisenberg(w),
        crate::wang::Monodromy::Commuting(_) => Err(ClassifyError::Unsupported),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomogeneousRow {
    pub model: &'static str,
    pub b1: &'static str,
    pub surface: &'static str,
    pub kodaira_dimension: &'static str,
}

/// Complex surfaces diffeomorphic to four-dimensional compact homogeneous manifolds.
pub fn homogeneous_surface_table() -> Vec<HomogeneousRow> {
    let row = |model, b1, surface, k| HomogeneousRow {
        model,
        b1,
        surface,
        kodaira_dimension: k,
    };
    vec![
        row("S^2 x T^2", "2", "Ruled Surface of genus 1", "-inf"),
        row("S^1 x_{Z_m} S^3/H", "1", "Hopf Surface", "-inf"),
        row("S^2 x S^2", "0", "Hirzebruch Surface of even type", "-inf"),
        row("CP^2", "0", "Complex Projective Space", "-inf"),
        row("Solvmanifold", "1", "Inoue Surface", "-inf"),
        row("Solvmanifold", "4", "Complex Torus", "0"),
        row("Solvmanifold", "3", "Primary Kodaira Surface", "0"),
        row("Solvmanifold", "2", "Hyperelliptic Surface", "0"),
        row("Solvmanifold", "1", "Secondary Kodaira Surface", "0"),
        row("S^1 x Γ\\SL~_2(R)", "odd", "Properly Elliptic Surface", "1"),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbifoldType {
    Hyperbolic,
    Flat,
    Spherical,
}

/// `e(B) - sum (1 - 1/m_i)` and its sign.
pub fn orbifold_euler(euler_base: i64, multiplicities: &[i64]) -> Result<(BigRational, OrbifoldType), ClassifyError> {
    let mut v = BigRational::from_integer(euler_base.into());
    for &m in multiplicities {
        if m < 2 {
            return Err(ClassifyError::InvalidMultiplicity(m));
        }
        v -= BigRational::one() - BigRational::new(1.into(), m.into());
    }
    let t = if v.is_negative() {
        OrbifoldType::Hyperbolic
    } else if v.is_zero() {
        OrbifoldType::Flat
    } else {
        OrbifoldType::Spherical
    };
    Ok((v, t))
}

/// Block diagonal `diag(A', 1)` with optional bottom row `(p, q, 1)`.
pub fn hyperelliptic_monodromy(a_prime: &IntMatrix, p: i64, q: i64) -> IntMatrix {
    let mut m = a_prime.extend_by_one();
    m.set(2, 0, p.into());
    m.set(2, 1, q.into());
    m
}

/// Normal form `A'` of the rotation by `eta` used by the hyperelliptic lattices.
pub fn rotation_normal_form(eta: Eta) -> IntMatrix {
    match eta {
        Eta::Pi => IntMatrix::from_i64_rows(&[&[-1, 0], &[0, -1]]),
        Eta::TwoPiOverThree => IntMatrix::from_i64_rows(&[&[0, 1], &[-1, -1]]),
        Eta::PiOverTwo => IntMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]),
        Eta::PiOverThree => IntMatrix::from_i64_rows(&[&[0, 1], &[-1, 1]]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ZPoly;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    fn companion(c: &[i64]) -> IntMatrix {
        IntMatrix::companion(&ZPoly::from_i64s(c)).unwrap()
    }

    #[test]
    fn type_ii_examples() {
        let r = classify_type_ii(&hyperelliptic_monodromy(&m(&[&[0, 1], &[-1, 0]]), 0, 0)).unwrap();
        assert_eq!(r.class, SurfaceClass::Hyperelliptic(Eta::PiOverTwo));
        assert_eq!(r.b1, 2);
        assert!(r.admits_kaehler);

        let r = classify_type_ii(&companion(&[-1, 0, -1, 1])).unwrap();
        assert_eq!(r.class, SurfaceClass::InoueS0);
        assert_eq!(r.b1, 1);
        assert!(!r.admits_kaehler);

        let r = classify_type_ii(&m(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]])).unwrap();
        assert_eq!(r.class, SurfaceClass::NilmanifoldB2);
        assert!(!r.admits_complex);

        let r = classify_type_ii(&m(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(r.class, SurfaceClass::PrimaryKodaira);
        assert_eq!(r.b1, 3);

        let r = classify_type_ii(&companion(&[-1, 6, -5, 1])).unwrap();
        assert_eq!(r.class, SurfaceClass::T3BundleRealRoots);
        assert_eq!(r.b1, 1);

        let r = classify_type_ii(&companion(&[-1, 4, -4, 1])).unwrap();
        assert_eq!(r.class, SurfaceClass::T2BundleRealRoots);
        assert_eq!(r.b1, 2);
    }

    #[test]
    fn type_ii_other_cases_carry_hints() {
        // roots 1 and a non-diagonalizable -1
        let a = m(&[&[-1, 1, 0], &[0, -1, 0], &[0, 0, 1]]);
        let r = classify_type_ii(&a).unwrap();
        assert_eq!(r.class, SurfaceClass::OtherNotEnumerated);
        assert_eq!(
            r.finite_cover_hint,
            Some(CoverHint {
                m: 2,
                class: SurfaceClass::PrimaryKodaira
            })
        );
        // roots 1 and two negative reals: x^2 + 3x + 1
        let a = hyperelliptic_monodromy(&m(&[&[0, 1], &[-1, -3]]), 0, 0);
        let r = classify_type_ii(&a).unwrap();
        assert_eq!(r.class, SurfaceClass::OtherNotEnumerated);
        assert_eq!(r.finite_cover_hint.unwrap().class, SurfaceClass::T2BundleRealRoots);
        assert!(matches!(
            classify_type_ii(&m(&[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]])),
            Err(ClassifyError::NotSl3(_))
        ));
    }

    #[test]
    fn type_iii_examples() {
        let r = classify_type_iii(1, &IntMatrix::identity(2), 1).unwrap();
        assert_eq!(r.class, SurfaceClass::PrimaryKodaira);
        let r = classify_type_iii(1, &m(&[&[0, 1], &[-1, -1]]), 1).unwrap();
        assert_eq!(r.class, SurfaceClass::SecondaryKodaira(Eta::TwoPiOverThree));
        assert_eq!(r.b1, 1);
        let r = classify_type_iii(1, &m(&[&[2, 1], &[1, 1]]), 1).unwrap();
        assert_eq!(r.class, SurfaceClass::InoueSPlus);
        let r = classify_type_iii(1, &m(&[&[1, 1], &[1, 0]]), -1).unwrap();
        assert_eq!(r.class, SurfaceClass::InoueSMinus);
        assert_eq!(r.b1, 1);
        let r = classify_type_iii(2, &m(&[&[-2, -1], &[-1, -1]]), 1).unwrap();
        assert_eq!(r.finite_cover_hint.unwrap().class, SurfaceClass::InoueSPlus);
        let r = classify_type_iii(1, &m(&[&[-1, 1], &[0, -1]]), 1).unwrap();
        assert_eq!(r.finite_cover_hint.unwrap().class, SurfaceClass::NilmanifoldB2);
        let r = classify_type_iii(1, &m(&[&[0, 1], &[1, 0]]), -1).unwrap();
        assert_eq!(r.finite_cover_hint.unwrap().class, SurfaceClass::PrimaryKodaira);
        assert!(matches!(
            classify_type_iii(1, &m(&[&[0, 1], &[1, 0]]), 1),
            Err(ClassifyError::Wang(WangError::EpsMismatch { .. }))
        ));
    }

    #[test]
    fn kaehler_predicate() {
        assert!(admits_kaehler(&SurfaceClass::ComplexTorus));
        assert!(admits_kaehler(&SurfaceClass::Hyperelliptic(Eta::Pi)));
        assert!(!admits_kaehler(&SurfaceClass::InoueSPlus));
    }

    #[test]
    fn table_rows() {
        let t = homogeneous_surface_table();
        assert_eq!(t.len(), 10);
        let torus = t.iter().find(|r| r.surface == "Complex Torus").unwrap();
        assert_eq!((torus.b1, torus.kodaira_dimension), ("4", "0"));
        let hopf = t.iter().find(|r| r.surface == "Hopf Surface").unwrap();
        assert_eq!((hopf.b1, hopf.kodaira_dimension), ("1", "-inf"));
    }

    #[test]
    fn orbifold_examples() {
        let (v, t) = orbifold_euler(2, &[2, 3, 7]).unwrap();
        assert_eq!(v, BigRational::new((-1).into(), 42.into()));
        assert_eq!(t, OrbifoldType::Hyperbolic);
        assert_eq!(
            orbifold_euler(0, &[]).unwrap(),
            (BigRational::zero(), OrbifoldType::Flat)
        );
        assert_eq!(
            orbifold_euler(2, &[2, 2]).unwrap(),
            (BigRational::one(), OrbifoldType::Spherical)
        );
        assert!(orbifold_euler(2, &[1]).is_err());
    }
}
