//! Lie algebras given by structure constants.

pub mod catalog;
pub mod types;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::exact::Matrix;
use crate::rational_string;
use crate::scalar::{Field, Scalar};

pub use catalog::{catalog, symbolic_catalog, CatalogEntry, CatalogId};
pub use types::{is_completely_solvable, is_rigid_type, Certificate, Decision, FlagCertificate, SpectrumWitness};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket of X{0} with itself")]
    DiagonalBracket(usize),
    #[error("coefficient vector has length {len}, expected {dim}")]
    CoefficientLength { len: usize, dim: usize },
    #[error("Jacobi identity fails on (X{}, X{}, X{})", .0[0], .0[1], .0[2])]
    Jacobi([usize; 3]),
    #[error("algebra is not solvable")]
    NotSolvable,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("change of basis is singular")]
    Singular,
    #[error("malformed structure constants: {0}")]
    Malformed(String),
}

/// Finite-dimensional Lie algebra with basis `X_1, ..., X_n`.
///
/// The full antisymmetric table is kept so that brackets of arbitrary vectors
/// are a double sum; indices are 0-based in the API and 1-based in JSON and
/// error witnesses.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<T: Scalar> {
    labels: Vec<String>,
    table: Vec<Vec<T>>,
}

pub type QLieAlgebra = LieAlgebra<BigRational>;

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

impl<T: Scalar> LieAlgebra<T> {
    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            labels: default_labels(n),
            table: vec![vec![T::zero(); n]; n * n],
        }
    }

    /// Builds the table without checking Jacobi. Each `(i, j, v)` sets
    /// `[X_i, X_j] = v` and `[X_j, X_i] = -v`.
    pub fn from_brackets_unchecked(
        labels: Vec<String>,
        brackets: Vec<(usize, usize, Vec<T>)>,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut g = LieAlgebra {
            labels,
            table: vec![vec![T::zero(); n]; n * n],
        };
        for (i, j, v) in brackets {
            for idx in [i, j] {
                if idx >= n {
                    return Err(LieError::IndexOutOfRange { index: idx + 1, dim: n });
                }
            }
            if i == j {
                return Err(LieError::DiagonalBracket(i + 1));
            }
            if v.len() != n {
                return Err(LieError::CoefficientLength { len: v.len(), dim: n });
            }
            g.table[j * n + i] = v.iter().map(|c| -c.clone()).collect();
            g.table[i * n + j] = v;
        }
        Ok(g)
    }

    pub fn from_brackets(labels: Vec<String>, brackets: Vec<(usize, usize, Vec<T>)>) -> Result<Self, LieError> {
        let g = Self::from_brackets_unchecked(labels, brackets)?;
        g.jacobi_check().map_err(LieError::Jacobi)?;
        Ok(g)
    }

    /// Shorthand for sparse tables: `(i, j, [(k, c), ...])` means
    /// `[X_i, X_j] = sum c X_k`, all indices 1-based.
    pub fn from_sparse(labels: Vec<String>, brackets: &[(usize, usize, Vec<(usize, T)>)]) -> Result<Self, LieError> {
        let n = labels.len();
        let mut dense = Vec::new();
        for (i, j, terms) in brackets {
            let mut v = vec![T::zero(); n];
            for (k, c) in terms {
                if *k == 0 || *k > n {
                    return Err(LieError::IndexOutOfRange { index: *k, dim: n });
                }
                v[k - 1] = v[k - 1].clone() + c.clone();
            }
            if *i == 0 || *j == 0 {
                return Err(LieError::IndexOutOfRange { index: 0, dim: n });
            }
            dense.push((i - 1, j - 1, v));
        }
        Self::from_brackets(labels, dense)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        self.labels = labels;
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[X_i, X_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[T] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        v[i] = T::one();
        v
    }

    pub fn bracket(&self, u: &[T], v: &[T]) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || i == j {
                    continue;
                }
                let c = ui.clone() * vj.clone();
                for (o, s) in out.iter_mut().zip(self.structure(i, j)) {
                    if !s.is_zero() {
                        *o = o.clone() + c.clone() * s.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad u`; column `j` is `[u, X_j]`.
    pub fn ad_vec(&self, u: &[T]) -> Matrix<T> {
        let n = self.dim();
        let cols: Vec<Vec<T>> = (0..n).map(|j| self.bracket(u, &self.basis_vector(j))).collect();
        Matrix::from_columns(&cols).expect("square by construction")
    }

    pub fn ad(&self, i: usize) -> Matrix<T> {
        self.ad_vec(&self.basis_vector(i))
    }

    /// First triple `i < j < k` (1-based) violating the Jacobi identity.
    pub fn jacobi_check(&self) -> Result<(), [usize; 3]> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
                    let a = self.bracket(&self.bracket(&xi, &xj), &xk);
                    let b = self.bracket(&self.bracket(&xj, &xk), &xi);
                    let c = self.bracket(&self.bracket(&xk, &xi), &xj);
                    let ok = a.into_iter().zip(b).zip(c).all(|((a, b), c)| (a + b + c).is_zero());
                    if !ok {
                        return Err([i + 1, j + 1, k + 1]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// `trace(ad X_i)` for each basis element.
    pub fn ad_traces(&self) -> Vec<T> {
        (0..self.dim()).map(|i| self.ad(i).trace()).collect()
    }

    pub fn is_unimodular(&self) -> bool {
        self.ad_traces().iter().all(Zero::is_zero)
    }

    /// Nonzero brackets `[X_i, X_j]` with `i < j`.
    pub fn brackets(&self) -> Vec<(usize, usize, &[T])> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.structure(i, j);
                if v.iter().any(|c| !c.is_zero()) {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LieAlgebra<U> {
        LieAlgebra {
            labels: self.labels.clone(),
            table: self.table.iter().map(|v| v.iter().map(&f).collect()).collect(),
        }
    }
}

fn span_rank<T: Field>(vectors: &[Vec<T>], n: usize) -> (usize, Vec<Vec<T>>) {
    if vectors.is_empty() {
        return (0, Vec::new());
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("rows share a length");
    let (r, pivots) = m.rref();
    let basis: Vec<Vec<T>> = (0..pivots.len())
        .map(|i| (0..n).map(|j| r.get(i, j).clone()).collect())
        .collect();
    (pivots.len(), basis)
}

impl<T: Field> LieAlgebra<T> {
    /// Rewrites the algebra in the basis `Y_a = sum_i P[i][a] X_i`.
    pub fn change_basis(&self, p: &Matrix<T>) -> Result<Self, LieError> {
        let n = self.dim();
        let inv = p.inverse().map_err(|_| LieError::Singular)?;
        let cols: Vec<Vec<T>> = (0..n).map(|a| p.column(a)).collect();
        let mut brackets = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let v = inv.mul_vec(&self.bracket(&cols[a], &cols[b]));
                brackets.push((a, b, v));
            }
        }
        Self::from_brackets_unchecked(default_labels(n), brackets)
    }

    fn bracket_span(&self, left: &[Vec<T>], right: &[Vec<T>]) -> Vec<Vec<T>> {
        let mut out = Vec::new();
        for u in left {
            for v in right {
                let w = self.bracket(u, v);
                if w.iter().any(|c| !c.is_zero()) {
                    out.push(w);
                }
            }
        }
        span_rank(&out, self.dim()).1
    }

    fn series(&self, lower_central: bool) -> Vec<usize> {
        let n = self.dim();
        let full: Vec<Vec<T>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let mut current = full.clone();
        let mut dims = vec![n];
        loop {
            let next = if lower_central {
                self.bracket_span(&full, &current)
            } else {
                self.bracket_span(&current, &current)
            };
            if next.len() == current.len() {
                return dims;
            }
            dims.push(next.len());
            if next.is_empty() {
                return dims;
            }
            current = next;
        }
    }

    /// Dimensions of `g, [g, g], [[g, g], [g, g]], ...` until stable.
    pub fn derived_series(&self) -> Vec<usize> {
        self.series(false)
    }

    /// Dimensions of `g, [g, g], [g, [g, g]], ...` until stable.
    pub fn lower_central_series(&self) -> Vec<usize> {
        self.series(true)
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last() == Some(&0) || self.dim() == 0
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0) || self.dim() == 0
    }

    pub fn derived_dim(&self) -> usize {
        self.derived_series().get(1).copied().unwrap_or(0)
    }

    /// Basis of `[g, g]` in reduced echelon form.
    pub fn derived_algebra(&self) -> Vec<Vec<T>> {
        let full: Vec<Vec<T>> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        self.bracket_span(&full, &full)
    }

    /// Whether the span of `vectors` is an ideal.
    pub fn is_ideal(&self, vectors: &[Vec<T>]) -> bool {
        let n = self.dim();
        let (r, _) = span_rank(vectors, n);
        vectors.iter().all(|v| {
            (0..n).all(|i| {
                let mut ext = vectors.to_vec();
                ext.push(self.bracket(&self.basis_vector(i), v));
                span_rank(&ext, n).0 == r
            })
        })
    }
}

impl QLieAlgebra {
    /// `{"labels": [...], "brackets": [[i, j, ["c1", ...]], ...]}` with 1-based `i < j`.
    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> = self
            .brackets()
            .into_iter()
            .map(|(i, j, v)| json!([i + 1, j + 1, v.iter().map(rational_string).collect::<Vec<_>>()]))
            .collect();
        json!({ "labels": self.labels, "brackets": brackets })
    }

    /// Accepts either the object form of [`Self::to_json`] or a bare bracket
    /// list together with `"dim"`.
    pub fn from_json(v: &Value) -> Result<Self, LieError> {
        let bad = |s: &str| LieError::Malformed(s.to_string());
        let (labels, list) = match v {
            Value::Object(o) => {
                let list = o.get("brackets").ok_or_else(|| bad("missing \"brackets\""))?;
                let labels = match (o.get("labels"), o.get("dim")) {
                    (Some(Value::Array(ls)), _) => ls
                        .iter()
                        .map(|l| l.as_str().map(str::to_string).ok_or_else(|| bad("label")))
                        .collect::<Result<Vec<_>, _>>()?,
                    (_, Some(d)) => default_labels(d.as_u64().ok_or_else(|| bad("\"dim\""))? as usize),
                    _ => return Err(bad("need \"labels\" or \"dim\"")),
                };
                (labels, list)
            }
            _ => return Err(bad("expected an object")),
        };
        let n = labels.len();
        let entries = list.as_array().ok_or_else(|| bad("\"brackets\" must be a list"))?;
        let mut brackets = Vec::new();
        for e in entries {
            let e = e.as_array().filter(|e| e.len() == 3).ok_or_else(|| bad("entry"))?;
            let i = e[0].as_u64().ok_or_else(|| bad("index"))? as usize;
            let j = e[1].as_u64().ok_or_else(|| bad("index"))? as usize;
            if i == 0 || j == 0 || i > n || j > n {
                return Err(LieError::IndexOutOfRange {
                    index: i.max(j),
                    dim: n,
                });
            }
            if i >= j {
                return Err(bad("entries need i < j"));
            }
            let coeffs = e[2]
                .as_array()
                .ok_or_else(|| bad("coefficients"))?
                .iter()
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            brackets.push((i - 1, j - 1, coeffs));
        }
        Self::from_brackets(labels, brackets)
    }
}

/// Parses `"p/q"`, `"p"` or a JSON integer.
pub fn parse_rational(v: &Value) -> Result<BigRational, LieError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| LieError::Malformed(format!("non-integer number {n}"))),
        Value::String(s) => s
            .trim()
            .parse::<BigRational>()
            .map_err(|_| LieError::Malformed(format!("bad rational {s:?}"))),
        _ => Err(LieError::Malformed(format!("bad rational {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn r(v: i64) -> BigRational {
        int(v)
    }

    fn heisenberg() -> QLieAlgebra {
        LieAlgebra::from_sparse(default_labels(3), &[(1, 2, vec![(3, r(1))])]).unwrap()
    }

    #[test]
    fn corrupted_heisenberg_fails_jacobi() {
        let g = LieAlgebra::from_brackets_unchecked(
            default_labels(3),
            vec![(0, 1, vec![r(0), r(0), r(1)]), (0, 2, vec![r(1), r(0), r(0)])],
        )
        .unwrap();
        assert_eq!(g.jacobi_check(), Err([1, 2, 3]));
        assert!(matches!(
            LieAlgebra::from_brackets(
                g.labels().to_vec(),
                vec![(0, 1, vec![r(0), r(0), r(1)]), (0, 2, vec![r(1), r(0), r(0)]),]
            ),
            Err(LieError::Jacobi([1, 2, 3]))
        ));
    }

    #[test]
    fn series_of_heisenberg() {
        let g = heisenberg();
        assert_eq!(g.lower_central_series(), vec![3, 1, 0]);
        assert_eq!(g.derived_series(), vec![3, 1, 0]);
        assert!(g.is_nilpotent() && g.is_unimodular());
    }

    #[test]
    fn non_unimodular_plane() {
        let g = LieAlgebra::from_sparse(default_labels(2), &[(1, 2, vec![(2, r(1))])]).unwrap();
        assert!(!g.is_unimodular());
        assert!(g.is_solvable() && !g.is_nilpotent());
        assert_eq!(g.lower_central_series(), vec![2, 1]);
    }

    #[test]
    fn sl2_is_not_solvable() {
        // [h, e] = 2e, [h, f] = -2f, [e, f] = h
        let g = LieAlgebra::from_sparse(
            default_labels(3),
            &[
                (1, 2, vec![(2, r(2))]),
                (1, 3, vec![(3, r(-2))]),
                (2, 3, vec![(1, r(1))]),
            ],
        )
        .unwrap();
        assert_eq!(g.derived_series(), vec![3]);
        assert!(!g.is_solvable());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let g = heisenberg();
        let back = QLieAlgebra::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        let bad = json!({"dim": 2, "brackets": [[2, 1, ["1", "0"]]]});
        assert!(QLieAlgebra::from_json(&bad).is_err());
        let bad = json!({"dim": 2, "brackets": [[1, 3, ["1", "0"]]]});
        assert!(matches!(
            QLieAlgebra::from_json(&bad),
            Err(LieError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn change_basis_preserves_structure() {
        let g = heisenberg();
        let p = Matrix::from_rows(vec![
            vec![r(1), r(2), r(0)],
            vec![r(0), r(1), r(0)],
            vec![r(3), r(0), r(5)],
        ])
        .unwrap();
        let h = g.change_basis(&p).unwrap();
        assert!(h.jacobi_check().is_ok());
        assert_eq!(h.lower_central_series(), vec![3, 1, 0]);
        let back = h.change_basis(&p.inverse().unwrap()).unwrap();
        assert_eq!(back, g);
    }
}
