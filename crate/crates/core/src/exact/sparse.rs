//! Sparse rational vectors and an incremental echelon basis.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type SparseVec = BTreeMap<usize, BigRational>;

/// `acc += c * v`, dropping entries that cancel.
pub fn axpy(acc: &mut SparseVec, c: &BigRational, v: &SparseVec) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(BigRational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

pub fn from_dense(v: &[BigRational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n];
    for (k, c) in v {
        out[*k] = c.clone();
    }
    out
}

/// Row-echelon basis keyed by leading index. Every row carries a tag vector
/// recording how it was assembled from the inserted vectors' tags.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, (SparseVec, SparseVec)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Eliminates every pivot from `v`, applying the same operations to `tag`.
    fn reduce(&self, v: &mut SparseVec, tag: &mut SparseVec) {
        let mut cursor = 0;
        while let Some((&k, c)) = v.range(cursor..).next() {
            match self.rows.get(&k) {
                Some((row, row_tag)) => {
                    let c = -c.clone();
                    axpy(v, &c, row);
                    axpy(tag, &c, row_tag);
                }
                None => cursor = k + 1,
            }
        }
    }

    /// Adds `v`; returns `None` if it was independent, otherwise the reduced
    /// tag, a relation `tag - sum c_j tag_j` whose vectors sum to zero.
    pub fn insert(&mut self, mut v: SparseVec, mut tag: SparseVec) -> Option<SparseVec> {
        self.reduce(&mut v, &mut tag);
        let Some((&lead, c)) = v.iter().next() else {
            return Some(tag);
        };
        let inv = BigRational::one() / c;
        for x in v.values_mut() {
            *x *= &inv;
        }
        for x in tag.values_mut() {
            *x *= &inv;
        }
        self.rows.insert(lead, (v, tag));
        None
    }

    /// Tag combination reproducing `v`, or `None` when `v` is not in the span.
    pub fn decompose(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut v = v.clone();
        let mut tag = SparseVec::new();
        self.reduce(&mut v, &mut tag);
        if !v.is_empty() {
            return None;
        }
        Some(tag.into_iter().map(|(k, c)| (k, -c)).collect())
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.decompose(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .map(|&(k, c)| (k, BigRational::from_integer(c.into())))
            .collect()
    }

    #[test]
    fn kernel_relation_and_decomposition() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(sv(&[(0, 1), (1, 2)]), sv(&[(0, 1)])).is_none());
        assert!(b.insert(sv(&[(1, 1), (2, 1)]), sv(&[(1, 1)])).is_none());
        // v2 = 2 v0 - 2 v1 + (0, 0, 2) ... dependent case: v2 = v0 + v1
        let rel = b.insert(sv(&[(0, 1), (1, 3), (2, 1)]), sv(&[(2, 1)])).unwrap();
        assert_eq!(rel, sv(&[(0, -1), (1, -1), (2, 1)]));
        assert_eq!(b.decompose(&sv(&[(0, 2), (1, 5), (2, 1)])), Some(sv(&[(0, 2), (1, 1)])));
        assert!(!b.contains(&sv(&[(2, 1)])));
        assert_eq!(b.len(), 2);
    }
}
