use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::exact::sparse::{axpy, SparseVec};
use crate::exact::Matrix;
use crate::liealg::{parse_rational, QLieAlgebra};
use crate::rational_string;

use super::GeomError;

/// Element of `Λ^k g*` in the dual basis; keys are strictly increasing
/// 0-based index tuples.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExteriorForm {
    degree: usize,
    terms: BTreeMap<Vec<usize>, BigRational>,
}

/// Sign of the permutation sorting `idx`, or `None` on a repeated index.
fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut negative = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
        if j > 0 && idx[j - 1] == idx[j] {
            return None;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(negative)
}

impl ExteriorForm {
    pub fn zero(degree: usize) -> Self {
        ExteriorForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut f = Self::zero(0);
        f.add_term(Vec::new(), c);
        f
    }

    /// The dual basis form `e^i`.
    pub fn basis(i: usize) -> Self {
        let mut f = Self::zero(1);
        f.add_term(vec![i], BigRational::one());
        f
    }

    /// `c e^{i_1} ∧ ... ∧ e^{i_k}` with indices in any order.
    pub fn monomial(c: BigRational, indices: &[usize]) -> Self {
        let mut f = Self::zero(indices.len());
        f.add_term(indices.to_vec(), c);
        f
    }

    fn add_term(&mut self, mut idx: Vec<usize>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let Some(neg) = sort_sign(&mut idx) else {
            return;
        };
        let c = if neg { -c } else { c };
        let e = self.terms.entry(idx.clone()).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn from_terms(degree: usize, terms: &[(BigRational, Vec<usize>)]) -> Result<Self, GeomError> {
        let mut f = Self::zero(degree);
        for (c, idx) in terms {
            if idx.len() != degree {
                return Err(GeomError::Form(format!(
                    "term of degree {} in a {degree}-form",
                    idx.len()
                )));
            }
            f.add_term(idx.clone(), c.clone());
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> BigRational {
        self.terms.get(idx).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().flat_map(|k| k.iter().copied()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(BigRational::one()), |acc, _| acc.wedge(self))
    }

    /// Value on basis vectors `X_{i_1}, ..., X_{i_k}` (0-based).
    pub fn eval_basis(&self, idx: &[usize]) -> BigRational {
        let mut sorted = idx.to_vec();
        match sort_sign(&mut sorted) {
            None => BigRational::zero(),
            Some(neg) => {
                let c = self.coeff(&sorted);
                if neg {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// Antisymmetric matrix `W` with `ω(u, v) = u^T W v`, for 2-forms.
    pub fn bilinear(&self, n: usize) -> Result<Matrix<BigRational>, GeomError> {
        if self.degree != 2 {
            return Err(GeomError::Form(format!(
                "expected a 2-form, got degree {}",
                self.degree
            )));
        }
        let mut w = Matrix::zeros(n, n);
        for (k, c) in &self.terms {
            let (a, b) = (k[0], k[1]);
            if b >= n {
                return Err(GeomError::IndexOutOfRange { index: b + 1, dim: n });
            }
            w.set(a, b, w.get(a, b) + c);
            w.set(b, a, w.get(b, a) - c);
        }
        Ok(w)
    }

    pub fn to_string_with(&self, labels: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = *c < BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let mono: Vec<String> = k
                .iter()
                .map(|&j| labels.get(j).map_or_else(|| format!("e{}", j + 1), |l| l.to_string()))
                .collect();
            if mono.is_empty() {
                s.push_str(&rational_string(&abs));
            } else {
                if !abs.is_one() {
                    s.push_str(&rational_string(&abs));
                    s.push('*');
                }
                s.push_str(&mono.join("^"));
            }
        }
        s
    }

    /// `{"degree": k, "terms": [["c", [i1, ..., ik]], ...]}` with 1-based indices.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!([rational_string(c), k.iter().map(|i| i + 1).collect::<Vec<_>>()]))
            .collect();
        json!({ "degree": self.degree, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self, GeomError> {
        let bad = |s: &str| GeomError::Form(s.to_string());
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"terms\" list"))?;
        let mut parsed = Vec::new();
        for t in terms {
            let t = t.as_array().filter(|t| t.len() == 2).ok_or_else(|| bad("term"))?;
            let c = parse_rational(&t[0]).map_err(|e| GeomError::Form(e.to_string()))?;
            let idx = t[1]
                .as_array()
                .ok_or_else(|| bad("indices"))?
                .iter()
                .map(|i| {
                    i.as_u64()
                        .filter(|&i| i >= 1)
                        .map(|i| i as usize - 1)
                        .ok_or_else(|| bad("indices are 1-based integers"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            parsed.push((c, idx));
        }
        let degree = match v.get("degree").and_then(Value::as_u64) {
            Some(d) => d as usize,
            None => parsed.first().map_or(0, |(_, i)| i.len()),
        };
        Self::from_terms(degree, &parsed)
    }
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[]))
    }
}

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Chevalley–Eilenberg complex `(Λ g*, d)` with `dξ(X, Y) = -ξ([X, Y])`.
/// Differentials are stored column-sparse: `d[k][m]` is the image of the
/// `m`-th monomial of degree `k` in degree `k + 1` coordinates.
#[derive(Clone, Debug)]
pub struct CEComplex {
    dim: usize,
    one_forms: Vec<ExteriorForm>,
    bases: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
    d: Vec<Vec<SparseVec>>,
}

impl CEComplex {
    /// Builds the complex after the one-time sign convention self-test.
    pub fn new(g: &QLieAlgebra) -> Result<Self, GeomError> {
        super::convention_anchor()?;
        Self::unanchored(g)
    }

    pub(crate) fn unanchored(g: &QLieAlgebra) -> Result<Self, GeomError> {
        if let Err(t) = g.jacobi_check() {
            return Err(GeomError::InvalidAlgebra(format!(
                "Jacobi fails on (X{}, X{}, X{})",
                t[0], t[1], t[2]
            )));
        }
        let n = g.dim();
        let one_forms: Vec<ExteriorForm> = (0..n)
            .map(|k| {
                let mut f = ExteriorForm::zero(2);
                for (i, j, v) in g.brackets() {
                    f.add_term(vec![i, j], -v[k].clone());
                }
                f
            })
            .collect();
        let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets(n, k)).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        let mut cx = CEComplex {
            dim: n,
            one_forms,
            bases,
            index,
            d: Vec::new(),
        };
        cx.d = (0..n)
            .map(|k| {
                cx.bases[k]
                    .iter()
                    .map(|mono| cx.sparse_coords(&cx.d_monomial(mono)))
                    .collect()
            })
            .collect();
        if let Some(k) = cx.d_squared_failure() {
            return Err(GeomError::InvalidAlgebra(format!("d∘d != 0 in degree {k}")));
        }
        Ok(cx)
    }

    fn d_monomial(&self, mono: &[usize]) -> ExteriorForm {
        let mut out = ExteriorForm::zero(mono.len() + 1);
        for (m, &i) in mono.iter().enumerate() {
            let left = ExteriorForm::monomial(BigRational::one(), &mono[..m]);
            let right = ExteriorForm::monomial(BigRational::one(), &mono[m + 1..]);
            let term = left.wedge(&self.one_forms[i]).wedge(&right);
            out = if m % 2 == 0 { out.add(&term) } else { out.sub(&term) };
        }
        out
    }

    fn d_squared_failure(&self) -> Option<usize> {
        (0..self.dim.saturating_sub(1)).find(|&k| {
            self.d[k].iter().any(|col| {
                let mut acc = SparseVec::new();
                for (r, c) in col {
                    axpy(&mut acc, c, &self.d[k + 1][*r]);
                }
                !acc.is_empty()
            })
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Monomial basis of `Λ^k g*`.
    pub fn basis(&self, k: usize) -> &[Vec<usize>] {
        &self.bases[k]
    }

    /// Position of a monomial in the degree basis.
    pub fn position(&self, mono: &[usize]) -> Option<usize> {
        self.index.get(mono.len())?.get(mono).copied()
    }

    /// Sparse columns of `d_k`.
    pub fn sparse_differential(&self, k: usize) -> &[SparseVec] {
        &self.d[k]
    }

    /// Dense matrix of `d_k : Λ^k → Λ^{k+1}` for `k < dim`.
    pub fn differential(&self, k: usize) -> Matrix<BigRational> {
        let rows = self.bases[k + 1].len();
        let mut m = Matrix::zeros(rows, self.bases[k].len());
        for (j, col) in self.d[k].iter().enumerate() {
            for (i, c) in col {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn d(&self, form: &ExteriorForm) -> ExteriorForm {
        form.terms()
            .fold(ExteriorForm::zero(form.degree() + 1), |acc, (mono, c)| {
                acc.add(&self.d_monomial(mono).scale(c))
            })
    }

    pub fn sparse_coords(&self, form: &ExteriorForm) -> SparseVec {
        let idx = &self.index[form.degree()];
        form.terms().map(|(m, c)| (idx[m], c.clone())).collect()
    }

    pub fn to_coords(&self, form: &ExteriorForm) -> Vec<BigRational> {
        self.bases[form.degree()].iter().map(|m| form.coeff(m)).collect()
    }

    pub fn from_coords(&self, k: usize, coords: &[BigRational]) -> ExteriorForm {
        let mut f = ExteriorForm::zero(k);
        for (m, c) in self.bases[k].iter().zip(coords) {
            f.add_term(m.clone(), c.clone());
        }
        f
    }

    pub fn from_sparse(&self, k: usize, coords: &SparseVec) -> ExteriorForm {
        let mut f = ExteriorForm::zero(k);
        for (i, c) in coords {
            f.add_term(self.bases[k][*i].clone(), c.clone());
        }
        f
    }

    /// Whether `d_{k+1} ∘ d_k = 0` in every degree.
    pub fn d_squared_vanishes(&self) -> bool {
        self.d_squared_failure().is_none()
    }
}
