use crate::exact::Matrix;
use crate::liealg::LieAlgebra;
use crate::scalar::{Field, Scalar};

use super::GeomError;

/// Linear `J` on the Lie algebra; column `i` holds `J X_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostComplexStructure<T: Scalar> {
    j: Matrix<T>,
}

impl<T: Scalar> AlmostComplexStructure<T> {
    pub fn new(j: Matrix<T>) -> Result<Self, GeomError> {
        if !j.is_square() || !j.rows().is_multiple_of(2) {
            return Err(GeomError::OddDimension(j.rows()));
        }
        let sq = &j * &j;
        if sq != -&Matrix::identity(j.rows()) {
            return Err(GeomError::NotAlmostComplex);
        }
        Ok(AlmostComplexStructure { j })
    }

    /// `J X_a = X_b`, `J X_b = -X_a` for every 0-based pair `(a, b)`.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GeomError> {
        let mut j = Matrix::zeros(n, n);
        for &(a, b) in pairs {
            j.set(b, a, T::one());
            j.set(a, b, -T::one());
        }
        Self::new(j)
    }

    /// `J X_{2m-1} = X_{2m}` on consecutive pairs.
    pub fn standard(n: usize) -> Result<Self, GeomError> {
        let pairs: Vec<(usize, usize)> = (0..n / 2).map(|m| (2 * m, 2 * m + 1)).collect();
        Self::from_pairs(n, &pairs)
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        self.j.mul_vec(v)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> AlmostComplexStructure<U> {
        AlmostComplexStructure { j: self.j.map(f) }
    }
}

impl<T: Field> AlmostComplexStructure<T> {
    /// `J` written in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix<T>) -> Result<Self, GeomError> {
        let inv = p.inverse().map_err(|_| GeomError::Singular)?;
        Self::new(&(&inv * &self.j) * p)
    }
}

fn sub<T: Scalar>(a: Vec<T>, b: Vec<T>) -> Vec<T> {
    a.into_iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `N_J(u, v) = [Ju, Jv] - J[Ju, v] - J[u, Jv] - [u, v]`.
pub fn nijenhuis_vec<T: Scalar>(g: &LieAlgebra<T>, j: &AlmostComplexStructure<T>, u: &[T], v: &[T]) -> Vec<T> {
    let (ju, jv) = (j.apply(u), j.apply(v));
    let a = g.bracket(&ju, &jv);
    let b = j.apply(&g.bracket(&ju, v));
    let c = j.apply(&g.bracket(u, &jv));
    let d = g.bracket(u, v);
    sub(sub(sub(a, b), c), d)
}

/// `N_J(X_i, X_j)` for 0-based indices.
pub fn nijenhuis<T: Scalar>(
    g: &LieAlgebra<T>,
    j: &AlmostComplexStructure<T>,
    i: usize,
    k: usize,
) -> Result<Vec<T>, GeomError> {
    let n = g.dim();
    if j.dim() != n {
        return Err(GeomError::DimensionMismatch {
            algebra: n,
            other: j.dim(),
        });
    }
    for idx in [i, k] {
        if idx >= n {
            return Err(GeomError::IndexOutOfRange { index: idx + 1, dim: n });
        }
    }
    Ok(nijenhuis_vec(g, j, &g.basis_vector(i), &g.basis_vector(k)))
}

/// First pair `i < j` (1-based) with `N_J(X_i, X_j) != 0`, or `None` when `J`
/// is integrable.
pub fn integrability_witness<T: Scalar>(
    g: &LieAlgebra<T>,
    j: &AlmostComplexStructure<T>,
) -> Result<Option<(usize, usize, Vec<T>)>, GeomError> {
    let n = g.dim();
    for a in 0..n {
        for b in a + 1..n {
            let v = nijenhuis(g, j, a, b)?;
            if v.iter().any(|c| !c.is_zero()) {
                return Ok(Some((a + 1, b + 1, v)));
            }
        }
    }
    Ok(None)
}

pub fn is_integrable<T: Scalar>(g: &LieAlgebra<T>, j: &AlmostComplexStructure<T>) -> Result<bool, GeomError> {
    Ok(integrability_witness(g, j)?.is_none())
}
