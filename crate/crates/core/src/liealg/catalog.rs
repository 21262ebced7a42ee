//! Built-in algebras: the six complex surface algebras, the rigid family
//! `C^l ⋊ R^{2k}` and the six-dimensional pseudo-Kähler example.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use super::{LieAlgebra, LieError, QLieAlgebra};
use crate::classify::Eta;
use crate::exact::{MPoly, Matrix};
use crate::geom::{AlmostComplexStructure, ExteriorForm};
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogId {
    Torus4,
    Hyperelliptic4,
    PrimaryKodaira4,
    SecondaryKodaira4,
    InoueS0 {
        a: BigRational,
        b: BigRational,
    },
    InoueSpm4 {
        q: BigRational,
    },
    /// Empty `angles` gives unit rotation speeds; otherwise `k * l` tags,
    /// entry `(i, j)` at index `(i - 1) * l + (j - 1)`.
    Example4 {
        k: usize,
        l: usize,
        angles: Vec<Eta>,
    },
    Example5,
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

fn sparse<T: Scalar>(n: usize, brackets: Vec<(usize, usize, Vec<(usize, T)>)>) -> Result<LieAlgebra<T>, LieError> {
    LieAlgebra::from_sparse(labels(n), &brackets)
}

pub fn torus4<T: Scalar>() -> LieAlgebra<T> {
    LieAlgebra::abelian(4)
}

pub fn hyperelliptic4<T: Scalar>() -> Result<LieAlgebra<T>, LieError> {
    sparse(4, vec![(4, 1, vec![(2, int(-1))]), (4, 2, vec![(1, int(1))])])
}

pub fn primary_kodaira4<T: Scalar>() -> Result<LieAlgebra<T>, LieError> {
    sparse(4, vec![(1, 2, vec![(3, int(-1))])])
}

pub fn secondary_kodaira4<T: Scalar>() -> Result<LieAlgebra<T>, LieError> {
    sparse(
        4,
        vec![
            (1, 2, vec![(3, int(-1))]),
            (4, 1, vec![(2, int(-1))]),
            (4, 2, vec![(1, int(1))]),
        ],
    )
}

pub fn inoue_s0<T: Scalar>(a: T, b: T) -> Result<LieAlgebra<T>, LieError> {
    sparse(
        4,
        vec![
            (4, 1, vec![(1, a.clone()), (2, -b.clone())]),
            (4, 2, vec![(1, b), (2, a.clone())]),
            (4, 3, vec![(3, int::<T>(-2) * a)]),
        ],
    )
}

pub fn inoue_spm<T: Scalar>() -> Result<LieAlgebra<T>, LieError> {
    sparse(
        4,
        vec![
            (2, 3, vec![(1, int(-1))]),
            (4, 2, vec![(2, int(1))]),
            (4, 3, vec![(3, int(-1))]),
        ],
    )
}

/// `[X_{2l+2i}, X_{2j-1}] = -w X_{2j}`, `[X_{2l+2i}, X_{2j}] = w X_{2j-1}`.
pub fn example4<T: Scalar>(k: usize, l: usize, weights: &[T]) -> Result<LieAlgebra<T>, LieError> {
    if k == 0 || l == 0 {
        return Err(LieError::InvalidParameter("k and l must be at least 1".into()));
    }
    if !weights.is_empty() && weights.len() != k * l {
        return Err(LieError::InvalidParameter(format!(
            "expected {} angles, got {}",
            k * l,
            weights.len()
        )));
    }
    let mut brackets = Vec::new();
    for i in 1..=k {
        for j in 1..=l {
            let w = weights.get((i - 1) * l + (j - 1)).cloned().unwrap_or_else(T::one);
            if w.is_zero() {
                continue;
            }
            let x = 2 * l + 2 * i;
            brackets.push((x, 2 * j - 1, vec![(2 * j, -w.clone())]));
            brackets.push((x, 2 * j, vec![(2 * j - 1, w)]));
        }
    }
    sparse(2 * l + 2 * k, brackets)
}

/// Basis `{X1, X2, Y1, Y2, Z, W}`.
pub fn example5<T: Scalar>() -> Result<LieAlgebra<T>, LieError> {
    let g = sparse(
        6,
        vec![
            (1, 5, vec![(1, int(1))]),
            (2, 5, vec![(2, int(-1))]),
            (3, 5, vec![(3, int(1))]),
            (4, 5, vec![(4, int(-1))]),
        ],
    )?;
    Ok(g.with_labels(["X1", "X2", "Y1", "Y2", "Z", "W"].map(String::from).to_vec()))
}

/// `JX1 = X2, JX3 = X4 - q X2, JX4 = -X3 - q X1` as printed for the `S^±` algebra.
pub fn inoue_spm_printed_j<T: Scalar>(q: T) -> AlmostComplexStructure<T> {
    let z = T::zero;
    let cols = vec![
        vec![z(), T::one(), z(), z()],
        vec![-T::one(), z(), z(), z()],
        vec![z(), -q.clone(), z(), T::one()],
        vec![-q, z(), -T::one(), z()],
    ];
    AlmostComplexStructure::new(Matrix::from_columns(&cols).expect("4x4")).expect("J^2 = -I for every q")
}

/// The printed structure with the roles of `X2` and `X3` exchanged:
/// `JX1 = X3, JX2 = X4 - q X3, JX4 = -X2 - q X1`.
pub fn inoue_spm_relabeled_j<T: Scalar>(q: T) -> AlmostComplexStructure<T> {
    let z = T::zero;
    let cols = vec![
        vec![z(), z(), T::one(), z()],
        vec![z(), z(), -q.clone(), T::one()],
        vec![-T::one(), z(), z(), z()],
        vec![-q, -T::one(), z(), z()],
    ];
    AlmostComplexStructure::new(Matrix::from_columns(&cols).expect("4x4")).expect("J^2 = -I for every q")
}

/// `JX1 = Y1, JX2 = Y2, JZ = W`.
pub fn example5_j<T: Scalar>() -> AlmostComplexStructure<T> {
    AlmostComplexStructure::from_pairs(6, &[(0, 2), (1, 3), (4, 5)]).expect("pairs are disjoint")
}

/// `α1∧α2 + β1∧β2 + γ∧η`.
pub fn example5_omega() -> ExteriorForm {
    let one = BigRational::from_integer(1.into());
    ExteriorForm::from_terms(
        2,
        &[(one.clone(), vec![0, 1]), (one.clone(), vec![2, 3]), (one, vec![4, 5])],
    )
    .expect("2-form")
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub algebra: QLieAlgebra,
    pub j: AlmostComplexStructure<BigRational>,
    pub omega: Option<ExteriorForm>,
}

fn rational(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn weights(angles: &[Eta]) -> Vec<BigRational> {
    angles.iter().map(|e| e.over_pi()).collect()
}

pub fn catalog(id: &CatalogId) -> Result<CatalogEntry, LieError> {
    let std_j = |n| AlmostComplexStructure::standard(n).expect("even dimension");
    let (algebra, j, omega) = match id {
        CatalogId::Torus4 => (torus4(), std_j(4), None),
        CatalogId::Hyperelliptic4 => (hyperelliptic4()?, std_j(4), None),
        CatalogId::PrimaryKodaira4 => (primary_kodaira4()?, std_j(4), None),
        CatalogId::SecondaryKodaira4 => (secondary_kodaira4()?, std_j(4), None),
        CatalogId::InoueS0 { a, b } => {
            if b.is_zero() {
                return Err(LieError::InvalidParameter("b must be nonzero".into()));
            }
            (inoue_s0(a.clone(), b.clone())?, std_j(4), None)
        }
        CatalogId::InoueSpm4 { q } => (inoue_spm()?, inoue_spm_printed_j(q.clone()), None),
        CatalogId::Example4 { k, l, angles } => {
            let g = example4(*k, *l, &weights(angles))?;
            let n = g.dim();
            (g, std_j(n), None)
        }
        CatalogId::Example5 => (example5()?, example5_j(), Some(example5_omega())),
    };
    Ok(CatalogEntry {
        id: id.clone(),
        algebra,
        j,
        omega,
    })
}

/// Same algebras with parameters left symbolic: `a = v0, b = v1` for `S^0`
/// and `q = v0` for `S^±`. Returns the parameter names.
pub fn symbolic_catalog(
    id: &CatalogId,
) -> Result<(LieAlgebra<MPoly>, AlmostComplexStructure<MPoly>, Vec<&'static str>), LieError> {
    let std_j = |n| AlmostComplexStructure::standard(n).expect("even dimension");
    let c = |r: &BigRational| MPoly::constant(r.clone());
    Ok(match id {
        CatalogId::InoueS0 { .. } => (inoue_s0(MPoly::var(0), MPoly::var(1))?, std_j(4), vec!["a", "b"]),
        CatalogId::InoueSpm4 { .. } => (inoue_spm()?, inoue_spm_printed_j(MPoly::var(0)), vec!["q"]),
        CatalogId::Example4 { k, l, angles } => {
            let w: Vec<MPoly> = weights(angles).iter().map(c).collect();
            let g = example4(*k, *l, &w)?;
            let n = g.dim();
            (g, std_j(n), vec![])
        }
        other => {
            let e = catalog(other)?;
            (e.algebra.map(c), e.j.map(c), vec![])
        }
    })
}

impl CatalogId {
    /// The six surface algebras, the rigid family for `1 <= k, l <= 3` and
    /// the pseudo-Kähler example, with default parameters `a = b = 1`, `q = 1`.
    pub fn standard_list() -> Vec<CatalogId> {
        let mut v = vec![
            CatalogId::Torus4,
            CatalogId::Hyperelliptic4,
            CatalogId::PrimaryKodaira4,
            CatalogId::SecondaryKodaira4,
            CatalogId::InoueS0 {
                a: rational(1),
                b: rational(1),
            },
            CatalogId::InoueSpm4 { q: rational(1) },
        ];
        for k in 1..=3 {
            for l in 1..=3 {
                v.push(CatalogId::Example4 {
                    k,
                    l,
                    angles: Vec::new(),
                });
            }
        }
        v.push(CatalogId::Example5);
        v
    }

    /// Betti number `b1` of the corresponding surface, for the six surface algebras.
    pub fn surface_b1(&self) -> Option<usize> {
        match self {
            CatalogId::Torus4 => Some(4),
            CatalogId::PrimaryKodaira4 => Some(3),
            CatalogId::Hyperelliptic4 => Some(2),
            CatalogId::SecondaryKodaira4 | CatalogId::InoueS0 { .. } | CatalogId::InoueSpm4 { .. } => Some(1),
            _ => None,
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogId::Torus4 => write!(f, "torus4"),
            CatalogId::Hyperelliptic4 => write!(f, "hyperelliptic4"),
            CatalogId::PrimaryKodaira4 => write!(f, "primary-kodaira4"),
            CatalogId::SecondaryKodaira4 => write!(f, "secondary-kodaira4"),
            CatalogId::InoueS0 { a, b } => write!(f, "inoue-s0:{a},{b}"),
            CatalogId::InoueSpm4 { q } => write!(f, "inoue-spm:{q}"),
            CatalogId::Example4 { k, l, angles } if angles.is_empty() => {
                write!(f, "example4:{k},{l}")
            }
            CatalogId::Example4 { k, l, angles } => {
                let tags: Vec<&str> = angles.iter().map(|e| e.as_str()).collect();
                write!(f, "example4:{k},{l}:{}", tags.join(","))
            }
            CatalogId::Example5 => write!(f, "example5"),
        }
    }
}

impl FromStr for CatalogId {
    type Err = LieError;

    /// Parses the [`fmt::Display`] form; parameters default to `a = b = 1`, `q = 1`.
    fn from_str(s: &str) -> Result<Self, LieError> {
        let bad = || LieError::InvalidParameter(format!("unknown catalog id {s:?}"));
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let rat = |t: &str| {
            t.trim()
                .parse::<BigRational>()
                .map_err(|_| LieError::InvalidParameter(format!("bad rational {t:?}")))
        };
        let nums: Vec<&str> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').collect()
        };
        Ok(match name {
            "torus4" => CatalogId::Torus4,
            "hyperelliptic4" => CatalogId::Hyperelliptic4,
            "primary-kodaira4" => CatalogId::PrimaryKodaira4,
            "secondary-kodaira4" => CatalogId::SecondaryKodaira4,
            "inoue-s0" => match nums.as_slice() {
                [] => CatalogId::InoueS0 {
                    a: rational(1),
                    b: rational(1),
                },
                [a, b] => CatalogId::InoueS0 { a: rat(a)?, b: rat(b)? },
                _ => return Err(bad()),
            },
            "inoue-spm" => match nums.as_slice() {
                [] => CatalogId::InoueSpm4 { q: rational(1) },
                [q] => CatalogId::InoueSpm4 { q: rat(q)? },
                _ => return Err(bad()),
            },
            "example4" => {
                let (kl, tags) = args.split_once(':').unwrap_or((args, ""));
                let kl: Vec<usize> = kl
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?;
                let [k, l] = kl.as_slice() else {
                    return Err(bad());
                };
                let angles = if tags.is_empty() {
                    Vec::new()
                } else {
                    tags.split(',')
                        .map(|t| Eta::parse(t.trim()).ok_or_else(bad))
                        .collect::<Result<_, _>>()?
                };
                CatalogId::Example4 { k: *k, l: *l, angles }
            }
            "example5" => CatalogId::Example5,
            _ => return Err(bad()),
        })
    }
}
