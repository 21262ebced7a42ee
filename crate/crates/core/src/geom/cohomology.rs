use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::sparse::{to_dense, EchelonBasis, SparseVec};
use crate::exact::Matrix;
use crate::liealg::QLieAlgebra;

use super::forms::{CEComplex, ExteriorForm};
use super::GeomError;

/// Element of `H^k(g)` in the coordinates of the chosen representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub coords: Vec<BigRational>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// Lie algebra cohomology with rational coefficients and chosen cocycle
/// representatives in every degree.
#[derive(Clone, Debug)]
pub struct CohomologyRing {
    complex: CEComplex,
    betti: Vec<usize>,
    representatives: Vec<Vec<ExteriorForm>>,
    /// Per degree: boundaries tagged zero, then representatives tagged by index.
    decomposition: Vec<EchelonBasis>,
}

impl CohomologyRing {
    pub fn new(g: &QLieAlgebra) -> Result<Self, GeomError> {
        let complex = CEComplex::new(g)?;
        let n = complex.dim();
        let mut betti = Vec::new();
        let mut representatives = Vec::new();
        let mut decomposition = Vec::new();
        for k in 0..=n {
            let size = complex.basis(k).len();
            let cocycles: Vec<SparseVec> = if k < n {
                let mut image = EchelonBasis::new();
                complex
                    .sparse_differential(k)
                    .iter()
                    .enumerate()
                    .filter_map(|(i, col)| image.insert(col.clone(), SparseVec::from([(i, BigRational::one())])))
                    .collect()
            } else {
                (0..size).map(|i| SparseVec::from([(i, BigRational::one())])).collect()
            };
            let mut basis = EchelonBasis::new();
            if k > 0 {
                for col in complex.sparse_differential(k - 1) {
                    basis.insert(col.clone(), SparseVec::new());
                }
            }
            let mut reps = Vec::new();
            for z in cocycles {
                let tag = SparseVec::from([(reps.len(), BigRational::one())]);
                if basis.insert(z.clone(), tag).is_none() {
                    reps.push(z);
                }
            }
            betti.push(reps.len());
            representatives.push(reps.iter().map(|r| complex.from_sparse(k, r)).collect());
            decomposition.push(basis);
        }
        Ok(CohomologyRing {
            complex,
            betti,
            representatives,
            decomposition,
        })
    }

    pub fn complex(&self) -> &CEComplex {
        &self.complex
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    pub fn representatives(&self, k: usize) -> &[ExteriorForm] {
        &self.representatives[k]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn poincare_duality(&self) -> bool {
        let n = self.betti.len() - 1;
        (0..=n).all(|k| self.betti[k] == self.betti[n - k])
    }

    /// Odd-degree Betti numbers are all even.
    pub fn betti_parity(&self) -> bool {
        self.betti.iter().skip(1).step_by(2).all(|b| b % 2 == 0)
    }

    /// Class of a closed form; rejects forms that are not closed.
    pub fn class_of(&self, form: &ExteriorForm) -> Result<CohomologyClass, GeomError> {
        let k = form.degree();
        if k > self.complex.dim() {
            return Ok(CohomologyClass {
                degree: k,
                coords: Vec::new(),
            });
        }
        if form.max_index().is_some_and(|i| i >= self.complex.dim()) {
            return Err(GeomError::Form("form index exceeds the dimension".into()));
        }
        if !self.complex.d(form).is_zero() {
            return Err(GeomError::NotClosed(form.to_string()));
        }
        let b = self.betti[k];
        if b == 0 {
            return Ok(CohomologyClass {
                degree: k,
                coords: Vec::new(),
            });
        }
        let tag = self.decomposition[k]
            .decompose(&self.complex.sparse_coords(form))
            .expect("cocycles lie in the span of representatives and boundaries");
        Ok(CohomologyClass {
            degree: k,
            coords: to_dense(&tag, b),
        })
    }

    pub fn representative(&self, c: &CohomologyClass) -> ExteriorForm {
        c.coords
            .iter()
            .zip(&self.representatives[c.degree])
            .fold(ExteriorForm::zero(c.degree), |acc, (a, r)| acc.add(&r.scale(a)))
    }

    /// Cup product; the zero class when the degree exceeds the dimension.
    pub fn cup(&self, x: &CohomologyClass, y: &CohomologyClass) -> CohomologyClass {
        let degree = x.degree + y.degree;
        if degree > self.complex.dim() {
            return CohomologyClass {
                degree,
                coords: Vec::new(),
            };
        }
        let w = self.representative(x).wedge(&self.representative(y));
        self.class_of(&w).expect("wedge of cocycles is closed")
    }

    /// Matrix of `[x] ↦ [ω^k ∧ x]` from `H^{n-k}` to `H^{n+k}`, `dim = 2n`.
    pub fn lefschetz_map(&self, omega: &ExteriorForm, k: usize) -> Result<Matrix<BigRational>, GeomError> {
        let two_n = self.complex.dim();
        let n = two_n / 2;
        let (src, dst) = (n - k, n + k);
        let power = omega.pow(k as u32);
        let cols: Vec<Vec<BigRational>> = self.representatives[src]
            .iter()
            .map(|r| self.class_of(&power.wedge(r)).map(|c| c.coords))
            .collect::<Result<_, _>>()?;
        if cols.is_empty() {
            return Ok(Matrix::zeros(self.betti[dst], 0));
        }
        Ok(Matrix::from_columns(&cols).expect("same length"))
    }
}
