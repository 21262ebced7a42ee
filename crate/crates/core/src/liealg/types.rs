//! Completely solvable and rigid type.
//!
//! For a solvable algebra, Lie's theorem triangularizes `ad(g)` over `C`, so
//! the eigenvalues of `ad(sum c_i X_i)` are `sum c_i λ_k(X_i)` for characters
//! `λ_k`. Reality (or pure imaginarity) of the spectra of the basis elements
//! therefore decides the statement for every element.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::{LieError, QLieAlgebra};
use crate::exact::roots::{negative_root_count_with_multiplicity, real_root_count_with_multiplicity};
use crate::exact::{
    factor_over_integers, rational_roots, Matrix, NumberField, NumberFieldElem, QPoly, ZPoly, MAX_FACTOR_DEGREE,
};

/// Basis element whose adjoint spectrum violates the condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumWitness {
    pub basis_index: usize,
    pub label: String,
    pub char_poly: String,
}

/// Chain `0 = I_0 ⊂ I_1 ⊂ ... ⊂ I_n = g` of ideals, `I_k = span(v_1..v_k)`,
/// with `ad X_i v_k ≡ λ_k(X_i) v_k (mod I_{k-1})`.
#[derive(Clone, Debug)]
pub struct FlagCertificate {
    pub field: Option<Arc<NumberField>>,
    pub vectors: Vec<Vec<NumberFieldElem>>,
    pub characters: Vec<Vec<NumberFieldElem>>,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub nilpotent: bool,
    pub flag: Option<FlagCertificate>,
}

#[derive(Clone, Debug)]
pub enum Decision {
    Holds(Certificate),
    Fails(SpectrumWitness),
    Undetermined(String),
}

impl Decision {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Decision::Holds(_) => Some(true),
            Decision::Fails(_) => Some(false),
            Decision::Undetermined(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Decision::Holds(c) => json!({
                "verdict": true,
                "nilpotent": c.nilpotent,
                "flag": c.flag.as_ref().map(FlagCertificate::to_json),
            }),
            Decision::Fails(w) => json!({
                "verdict": false,
                "witness": {"basis": w.label, "char_poly": w.char_poly},
            }),
            Decision::Undetermined(r) => json!({"verdict": "undetermined", "reason": r}),
        }
    }
}

impl FlagCertificate {
    pub fn to_json(&self) -> Value {
        let s = |v: &Vec<NumberFieldElem>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        json!({
            "field": self.field.as_ref().map(|f| f.min_poly().to_string()),
            "vectors": self.vectors.iter().map(s).collect::<Vec<_>>(),
            "characters": self.characters.iter().map(s).collect::<Vec<_>>(),
        })
    }

    /// Re-checks the chain against `g`: every `I_k` is an ideal and the
    /// stated characters hold modulo `I_{k-1}`.
    pub fn verify(&self, g: &QLieAlgebra) -> bool {
        let n = g.dim();
        if self.vectors.len() != n || self.characters.len() != n {
            return false;
        }
        let ads: Vec<Matrix<NumberFieldElem>> = (0..n).map(|i| lift(&g.ad(i))).collect();
        for k in 0..n {
            let below = &self.vectors[..k];
            let with = &self.vectors[..=k];
            if rank_of(with, n) != k + 1 {
                return false;
            }
            for (i, ad) in ads.iter().enumerate() {
                let image = ad.mul_vec(&self.vectors[k]);
                let lam = &self.characters[k][i];
                let residue: Vec<NumberFieldElem> = image
                    .into_iter()
                    .zip(&self.vectors[k])
                    .map(|(a, v)| a - lam.clone() * v.clone())
                    .collect();
                let mut ext = below.to_vec();
                ext.push(residue);
                if rank_of(&ext, n) != k {
                    return false;
                }
            }
        }
        true
    }
}

fn lift(m: &Matrix<BigRational>) -> Matrix<NumberFieldElem> {
    m.map(|c| NumberFieldElem::rational(c.clone()))
}

fn rank_of(vectors: &[Vec<NumberFieldElem>], n: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("rows share a length");
    debug_assert_eq!(m.cols(), n);
    m.rank()
}

fn char_polys(g: &QLieAlgebra) -> Vec<QPoly> {
    (0..g.dim())
        .map(|i| g.ad(i).char_poly().expect("ad is square"))
        .collect()
}

fn witness(g: &QLieAlgebra, i: usize, p: &QPoly) -> SpectrumWitness {
    SpectrumWitness {
        basis_index: i + 1,
        label: g.labels()[i].clone(),
        char_poly: p.to_primitive_integer().to_string(),
    }
}

fn all_real(p: &QPoly) -> bool {
    real_root_count_with_multiplicity(p) == p.degree().unwrap_or(0)
}

/// All roots lie on the imaginary axis: `p = x^e s(x^2)` with every root of
/// `s` real and non-positive.
fn all_imaginary(p: &QPoly) -> bool {
    let d = p.degree().unwrap_or(0);
    let c = p.coeffs();
    if c.iter().enumerate().any(|(k, v)| (k + d) % 2 == 1 && !v.is_zero()) {
        return false;
    }
    let s = QPoly::new(c.iter().skip(d % 2).step_by(2).cloned().collect());
    let ds = s.degree().unwrap_or(0);
    let zero_mult = s.coeffs().iter().take_while(|v| v.is_zero()).count();
    negative_root_count_with_multiplicity(&s) + zero_mult == ds
}

fn ensure_solvable(g: &QLieAlgebra) -> Result<(), LieError> {
    if g.is_solvable() {
        Ok(())
    } else {
        Err(LieError::NotSolvable)
    }
}

/// Every `ad x` has only real eigenvalues.
pub fn is_completely_solvable(g: &QLieAlgebra) -> Result<Decision, LieError> {
    ensure_solvable(g)?;
    let polys = char_polys(g);
    if let Some((i, p)) = polys.iter().enumerate().find(|(_, p)| !all_real(p)) {
        return Ok(Decision::Fails(witness(g, i, p)));
    }
    let nilpotent = g.is_nilpotent();
    match build_flag(g, &polys) {
        Ok(flag) => Ok(Decision::Holds(Certificate {
            nilpotent,
            flag: Some(flag),
        })),
        Err(reason) => Ok(Decision::Undetermined(reason)),
    }
}

/// Every `ad x` has only purely imaginary (or zero) eigenvalues.
pub fn is_rigid_type(g: &QLieAlgebra) -> Result<Decision, LieError> {
    ensure_solvable(g)?;
    let nilpotent = g.is_nilpotent();
    if nilpotent {
        return Ok(Decision::Holds(Certificate { nilpotent, flag: None }));
    }
    let polys = char_polys(g);
    if let Some((i, p)) = polys.iter().enumerate().find(|(_, p)| !all_imaginary(p)) {
        return Ok(Decision::Fails(witness(g, i, p)));
    }
    Ok(Decision::Holds(Certificate { nilpotent, flag: None }))
}

fn squarefree_part(d: &BigInt) -> (BigInt, BigInt) {
    // d = r^2 * s with s squarefree; small discriminants only
    let mut s = d.clone();
    let mut r = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= s.abs() {
        let f2 = &f * &f;
        while (&s % &f2).is_zero() {
            s /= &f2;
            r *= &f;
        }
        f += 1;
    }
    (r, s)
}

/// Rational roots of each `ad X_i` plus roots of real quadratic factors, all
/// expressed in a single field `Q(√s)`.
fn eigen_candidates(polys: &[QPoly]) -> Result<(Option<Arc<NumberField>>, Vec<Vec<NumberFieldElem>>), String> {
    let mut field: Option<(Arc<NumberField>, BigInt)> = None;
    let mut out = Vec::new();
    for p in polys {
        let z = p.to_primitive_integer();
        let roots = rational_roots(&z);
        let mut rest = z.clone();
        for r in &roots {
            let lin = ZPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
            while let Some(q) = rest.exact_div(&lin) {
                rest = q;
            }
        }
        let mut cands: Vec<NumberFieldElem> = roots.into_iter().map(NumberFieldElem::rational).collect();
        if rest.degree().unwrap_or(0) > 0 {
            if rest.degree().unwrap() > MAX_FACTOR_DEGREE {
                return Err(format!("irrational part of degree {} in {z}", rest.degree().unwrap()));
            }
            let factored = factor_over_integers(&rest).map_err(|e| e.to_string())?;
            for (f, _) in &factored.factors {
                if f.degree() != Some(2) {
                    return Err(format!("eigenvalues need a field of degree {:?}", f.degree()));
                }
                let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
                let disc = &b * &b - BigInt::from(4) * &a * &c;
                let (r, s) = squarefree_part(&disc);
                let (k, s0) = match &field {
                    Some((k, s0)) => (k.clone(), s0.clone()),
                    None => {
                        let k = NumberField::largest_real(&ZPoly::new(vec![-s.clone(), BigInt::zero(), BigInt::one()]))
                            .map_err(|e| e.to_string())?;
                        field = Some((k.clone(), s.clone()));
                        (k, s.clone())
                    }
                };
                if s != s0 {
                    return Err("eigenvalues span more than one quadratic field".into());
                }
                let sqrt = k.generator();
                let two_a = BigRational::from_integer(BigInt::from(2) * &a);
                let base = NumberFieldElem::rational(BigRational::from_integer(-b.clone()) / &two_a);
                let step = sqrt * NumberFieldElem::rational(BigRational::from_integer(r) / &two_a);
                cands.push(base.clone() + step.clone());
                cands.push(base - step);
            }
        }
        out.push(cands);
    }
    Ok((field.map(|(k, _)| k), out))
}

fn build_flag(g: &QLieAlgebra, polys: &[QPoly]) -> Result<FlagCertificate, String> {
    let n = g.dim();
    let (field, cands) = eigen_candidates(polys)?;
    let ads: Vec<Matrix<NumberFieldElem>> = (0..n).map(|i| lift(&g.ad(i))).collect();
    let mut vectors: Vec<Vec<NumberFieldElem>> = Vec::new();
    let mut characters = Vec::new();
    while vectors.len() < n {
        let annihilator = if vectors.is_empty() {
            Matrix::identity(n)
        } else {
            let m = Matrix::from_rows(vectors.clone()).expect("rows share a length");
            let rows = m.kernel();
            Matrix::from_rows(rows.into_iter().collect()).expect("nonempty kernel")
        };
        let mut chosen = Vec::new();
        let found = search(&ads, &cands, &annihilator, vectors.len(), &mut chosen, Vec::new());
        let Some(v) = found else {
            return Err(format!("no common eigenvector at step {}", vectors.len() + 1));
        };
        vectors.push(v);
        characters.push(chosen);
    }
    Ok(FlagCertificate {
        field,
        vectors,
        characters,
    })
}

/// Depth-first choice of `λ_i` for each generator; returns a vector outside
/// the current ideal satisfying all chosen eigen-conditions modulo it.
fn search(
    ads: &[Matrix<NumberFieldElem>],
    cands: &[Vec<NumberFieldElem>],
    annihilator: &Matrix<NumberFieldElem>,
    ideal_dim: usize,
    chosen: &mut Vec<NumberFieldElem>,
    rows: Vec<Vec<NumberFieldElem>>,
) -> Option<Vec<NumberFieldElem>> {
    let n = annihilator.cols();
    let kernel = if rows.is_empty() {
        (0..n)
            .map(|i| {
                let mut v = vec![NumberFieldElem::zero(); n];
                v[i] = NumberFieldElem::one();
                v
            })
            .collect()
    } else {
        Matrix::from_rows(rows.clone()).expect("rows share a length").kernel()
    };
    if kernel.len() <= ideal_dim {
        return None;
    }
    let i = chosen.len();
    if i == ads.len() {
        return kernel
            .into_iter()
            .find(|v| annihilator.mul_vec(v).iter().any(|c| !c.is_zero()));
    }
    let mut options = cands[i].clone();
    if ads[i].is_zero() {
        options = vec![NumberFieldElem::zero()];
    }
    for lam in options {
        let shifted = &ads[i] - &Matrix::identity(n).scale(&lam);
        let block = annihilator.checked_mul(&shifted).expect("annihilator has n columns");
        let mut next = rows.clone();
        next.extend(block.to_rows());
        chosen.push(lam);
        if let Some(v) = search(ads, cands, annihilator, ideal_dim, chosen, next) {
            return Some(v);
        }
        chosen.pop();
    }
    None
}
