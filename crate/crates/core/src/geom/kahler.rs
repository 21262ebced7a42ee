use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::exact::Matrix;
use crate::liealg::{is_completely_solvable, QLieAlgebra};

use super::acs::{integrability_witness, AlmostComplexStructure};
use super::cohomology::CohomologyRing;
use super::forms::{CEComplex, ExteriorForm};
use super::GeomError;

fn check_two_form(g: &QLieAlgebra, omega: &ExteriorForm) -> Result<usize, GeomError> {
    let n = g.dim();
    if !n.is_multiple_of(2) {
        return Err(GeomError::OddDimension(n));
    }
    if omega.degree() != 2 {
        return Err(GeomError::Form(format!(
            "expected a 2-form, got degree {}",
            omega.degree()
        )));
    }
    if omega.max_index().is_some_and(|i| i >= n) {
        return Err(GeomError::Form("form index exceeds the dimension".into()));
    }
    Ok(n / 2)
}

/// `dω = 0` and `ω^n ≠ 0`.
pub fn is_symplectic(g: &QLieAlgebra, omega: &ExteriorForm) -> Result<bool, GeomError> {
    let half = check_two_form(g, omega)?;
    let cx = CEComplex::new(g)?;
    Ok(cx.d(omega).is_zero() && !omega.pow(half as u32).is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoKahlerFailure {
    NotAlmostComplex,
    NotClosed,
    NotIntegrable { i: usize, j: usize },
    NotCompatible,
    Degenerate,
}

impl PseudoKahlerFailure {
    pub fn code(&self) -> &'static str {
        match self {
            PseudoKahlerFailure::NotAlmostComplex => "j_squared_not_minus_identity",
            PseudoKahlerFailure::NotClosed => "omega_not_closed",
            PseudoKahlerFailure::NotIntegrable { .. } => "nijenhuis_nonzero",
            PseudoKahlerFailure::NotCompatible => "omega_not_j_invariant",
            PseudoKahlerFailure::Degenerate => "metric_degenerate",
        }
    }
}

/// Checks `J^2 = -I`, `dω = 0`, `N_J = 0`, `ω(J·, J·) = ω` and nondegeneracy of
/// `ω(·, J·)`, reporting the first failure. The metric may be indefinite.
pub fn is_pseudo_kahler(
    g: &QLieAlgebra,
    omega: &ExteriorForm,
    j: &Matrix<BigRational>,
) -> Result<Result<(), PseudoKahlerFailure>, GeomError> {
    check_two_form(g, omega)?;
    let n = g.dim();
    if j.rows() != n || j.cols() != n {
        return Err(GeomError::DimensionMismatch {
            algebra: n,
            other: j.rows(),
        });
    }
    let Ok(acs) = AlmostComplexStructure::new(j.clone()) else {
        return Ok(Err(PseudoKahlerFailure::NotAlmostComplex));
    };
    let cx = CEComplex::new(g)?;
    if !cx.d(omega).is_zero() {
        return Ok(Err(PseudoKahlerFailure::NotClosed));
    }
    if let Some((i, k, _)) = integrability_witness(g, &acs)? {
        return Ok(Err(PseudoKahlerFailure::NotIntegrable { i, j: k }));
    }
    let w = omega.bilinear(n)?;
    if &(&j.transpose() * &w) * j != w {
        return Ok(Err(PseudoKahlerFailure::NotCompatible));
    }
    let metric = &w * j;
    if metric.det().map_or(true, |d| d.is_zero()) {
        return Ok(Err(PseudoKahlerFailure::Degenerate));
    }
    Ok(Ok(()))
}

/// For `k = 1..n`, whether `[ω]^k ∪ · : H^{n-k} → H^{n+k}` is an isomorphism.
pub fn hard_lefschetz(g: &QLieAlgebra, omega: &ExteriorForm) -> Result<Vec<bool>, GeomError> {
    if !is_symplectic(g, omega)? {
        return Err(GeomError::NotSymplectic);
    }
    let ring = CohomologyRing::new(g)?;
    hard_lefschetz_in(&ring, omega)
}

pub fn hard_lefschetz_in(ring: &CohomologyRing, omega: &ExteriorForm) -> Result<Vec<bool>, GeomError> {
    let n = ring.complex().dim() / 2;
    let b = ring.betti();
    (1..=n)
        .map(|k| {
            let (src, dst) = (b[n - k], b[n + k]);
            if src != dst {
                return Ok(false);
            }
            if src == 0 {
                return Ok(true);
            }
            Ok(ring.lefschetz_map(omega, k)?.rank() == src)
        })
        .collect()
}

pub fn betti_numbers(g: &QLieAlgebra) -> Result<Vec<usize>, GeomError> {
    Ok(CohomologyRing::new(g)?.betti().to_vec())
}

pub fn betti_parity_check(g: &QLieAlgebra) -> Result<bool, GeomError> {
    Ok(CohomologyRing::new(g)?.betti_parity())
}

/// Report object with Betti numbers, duality, Lefschetz and pseudo-Kähler
/// verdicts. Cohomology equals de Rham cohomology of the solvmanifold only in
/// the completely solvable case, flagged by `de_rham_valid`.
pub fn geometry_report(
    g: &QLieAlgebra,
    omega: Option<&ExteriorForm>,
    j: Option<&Matrix<BigRational>>,
) -> Result<Value, GeomError> {
    let ring = CohomologyRing::new(g)?;
    let de_rham_valid = matches!(is_completely_solvable(g).map(|d| d.holds()), Ok(Some(true)));
    let (symplectic, lefschetz) = match omega {
        Some(w) if is_symplectic(g, w)? => (Some(true), Some(hard_lefschetz_in(&ring, w)?)),
        Some(_) => (Some(false), None),
        None => (None, None),
    };
    let pseudo = match (omega, j) {
        (Some(w), Some(j)) => Some(match is_pseudo_kahler(g, w, j)? {
            Ok(()) => json!({"holds": true}),
            Err(f) => json!({"holds": false, "failed": f.code()}),
        }),
        _ => None,
    };
    Ok(json!({
        "betti": ring.betti(),
        "euler_characteristic": ring.euler_characteristic(),
        "poincare_duality": ring.poincare_duality(),
        "betti_parity": ring.betti_parity(),
        "symplectic": symplectic,
        "hard_lefschetz": lefschetz,
        "pseudo_kahler": pseudo,
        "de_rham_valid": de_rham_valid,
    }))
}
