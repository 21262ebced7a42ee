use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{ExactError, Poly};
use crate::scalar::{Field, Scalar};

/// Dense row-major matrix over any [`Scalar`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: &[Vec<T>]) -> Result<Self, ExactError> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(ExactError::Shape("ragged columns".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(entries: &[T]) -> Self {
        let n = entries.len();
        Matrix::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| (0..self.cols).fold(T::zero(), |acc, j| acc + self.get(i, j).clone() * v[j].clone()))
            .collect()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self.get(i, k).clone() * rhs.get(k, j).clone())
        }))
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, ExactError> {
        if self.rows != other.rows {
            return Err(ExactError::Shape("hstack row mismatch".into()));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    fn submatrix(&self, r0: usize, c0: usize) -> Self {
        Matrix::from_fn(self.rows - r0, self.cols - c0, |i, j| self.get(i + r0, j + c0).clone())
    }

    /// Characteristic polynomial `det(xI - M)` by Berkowitz's division-free
    /// algorithm, so it works over any commutative ring.
    pub fn char_poly(&self) -> Result<Poly<T>, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        // coefficients from the leading term down
        let top_down = berkowitz_vector(self);
        Ok(Poly::new(top_down.into_iter().rev().collect()))
    }

    pub fn det(&self) -> Result<T, ExactError> {
        let cp = self.char_poly()?;
        let c0 = cp.coeff(0);
        Ok(if self.rows.is_multiple_of(2) { c0 } else { -c0 })
    }

    /// Adjugate, computed from cofactors; ring operations only.
    pub fn adjugate(&self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 1 {
            return Ok(Matrix::identity(1));
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = Matrix::from_fn(n - 1, n - 1, |a, b| {
                    let r = if a < j { a } else { a + 1 };
                    let c = if b < i { b } else { b + 1 };
                    self.get(r, c).clone()
                });
                let d = minor.det()?;
                out.set(i, j, if (i + j) % 2 == 0 { d } else { -d });
            }
        }
        Ok(out)
    }
}

fn berkowitz_vector<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let n = m.rows;
    if n == 0 {
        return vec![T::one()];
    }
    if n == 1 {
        return vec![T::one(), -m.get(0, 0).clone()];
    }
    let a = m.get(0, 0).clone();
    let r: Vec<T> = (1..n).map(|j| m.get(0, j).clone()).collect();
    let sub = m.submatrix(1, 1);
    let mut diags = vec![T::one(), -a];
    let mut power: Vec<T> = (1..n).map(|i| m.get(i, 0).clone()).collect();
    for step in 0..n - 1 {
        if step > 0 {
            power = sub.mul_vec(&power);
        }
        let dot = r
            .iter()
            .zip(&power)
            .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
        diags.push(-dot);
    }
    let inner = berkowitz_vector(&sub);
    // lower-triangular Toeplitz (n+1) x n times inner (length n)
    (0..=n)
        .map(|i| {
            (0..n)
                .filter(|&j| j <= i)
                .fold(T::zero(), |acc, j| acc + diags[i - j].clone() * inner[j].clone())
        })
        .collect()
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
            }
            let inv = T::one() / m.get(row, col).clone();
            for j in 0..m.cols {
                let v = m.get(row, j).clone() * inv.clone();
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(r, j).clone() - f.clone() * m.get(row, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ExactError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Solves `M x = b`, returning one solution if the system is consistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let col = Matrix::from_fn(self.rows, 1, |i, _| b[i].clone());
        let aug = self.hstack(&col).ok()?;
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }
}

impl Matrix<BigInt> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map(|v| BigRational::from_integer(v.clone()))
    }

    /// Companion matrix of a monic integer polynomial, with `x^n` eliminated
    /// through the last column.
    pub fn companion(p: &Poly<BigInt>) -> Result<Self, ExactError> {
        let n = p.degree().ok_or(ExactError::ZeroPolynomial)?;
        if p.leading() != BigInt::from(1) {
            return Err(ExactError::NotMonic);
        }
        Ok(Matrix::from_fn(n, n, |i, j| {
            if j == n - 1 {
                -p.coeff(i)
            } else if i == j + 1 {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        }))
    }

    /// Block diagonal `diag(a, [1])`.
    pub fn extend_by_one(&self) -> Self {
        let n = self.rows;
        Matrix::from_fn(n + 1, n + 1, |i, j| {
            if i < n && j < n {
                self.get(i, j).clone()
            } else if i == j {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        })
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix shape mismatch")
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|a| -a.clone())
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ZPoly;

    /// Independent oracle: Laplace expansion of det(xI - M) over polynomials.
    fn laplace_char_poly(m: &Matrix<BigInt>) -> ZPoly {
        fn det(rows: &[Vec<ZPoly>]) -> ZPoly {
            if rows.is_empty() {
                return ZPoly::one();
            }
            let n = rows.len();
            let mut acc = ZPoly::zero();
            for j in 0..n {
                let minor: Vec<Vec<ZPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][j] * &det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let n = m.rows();
        let rows: Vec<Vec<ZPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = ZPoly::constant(-m.get(i, j).clone());
                        if i == j {
                            &c + &ZPoly::x()
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        det(&rows)
    }

    #[test]
    fn char_poly_examples() {
        let u = Matrix::from_i64_rows(&[&[1, 5], &[0, 1]]);
        assert_eq!(u.char_poly().unwrap(), ZPoly::from_i64s(&[1, -2, 1]));
        let r = Matrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        assert_eq!(r.char_poly().unwrap(), ZPoly::from_i64s(&[1, 0, 1]));
        let p = ZPoly::from_i64s(&[-1, 0, -1, 1]);
        let c = Matrix::companion(&p).unwrap();
        assert_eq!(c.char_poly().unwrap(), p);
        assert_eq!(c.det().unwrap(), BigInt::from(1));
    }

    #[test]
    fn char_poly_rejects_non_square() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 3], &[4, 5, 6]]);
        assert!(matches!(m.char_poly(), Err(ExactError::NotSquare { .. })));
    }

    #[test]
    fn berkowitz_matches_laplace_oracle() {
        let mats = [
            Matrix::from_i64_rows(&[&[2, -1, 3], &[0, 4, 1], &[5, -2, -3]]),
            Matrix::from_i64_rows(&[&[1, 2, 0, -1], &[3, -1, 2, 2], &[0, 1, 1, 4], &[-2, 0, 3, 1]]),
            Matrix::from_i64_rows(&[
                &[0, 1, 0, 0, 2, 1],
                &[1, 0, 3, 0, 0, -1],
                &[0, 2, 0, 1, 1, 0],
                &[4, 0, 1, 0, -3, 2],
                &[1, 1, 1, 1, 1, 1],
                &[-1, 0, 2, 0, 0, 5],
            ]),
        ];
        for m in &mats {
            assert_eq!(m.char_poly().unwrap(), laplace_char_poly(m));
        }
    }

    #[test]
    fn kernel_rank_inverse() {
        let m = Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]).to_rational();
        let id = Matrix::identity(3);
        let n = &m - &id;
        assert_eq!(n.rank(), 2);
        let k = n.kernel();
        assert_eq!(k.len(), 1);
        assert!(n
            .mul_vec(&k[0])
            .iter()
            .all(|v| v == &BigRational::from_integer(0.into())));
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let sing = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]).to_rational();
        assert!(matches!(sing.inverse(), Err(ExactError::Singular)));
    }

    #[test]
    fn adjugate_identity() {
        let m = Matrix::from_i64_rows(&[&[2, -1, 3], &[0, 4, 1], &[5, -2, -3]]);
        let adj = m.adjugate().unwrap();
        let d = m.det().unwrap();
        assert_eq!(&m * &adj, Matrix::identity(3).scale(&d));
    }
}
