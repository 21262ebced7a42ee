//! Exact arithmetic kernel: polynomials, matrices, factorization, real roots,
//! interval arithmetic and small number fields.

pub mod factor;
pub mod interval;
pub mod matrix;
pub mod mpoly;
pub mod numfield;
pub mod poly;
pub mod roots;
pub mod sparse;
pub mod spectral;

pub use factor::{factor_over_integers, rational_roots, squarefree_decomposition, FactoredPoly, MAX_FACTOR_DEGREE};
pub use interval::RatInterval;
pub use matrix::Matrix;
pub use mpoly::MPoly;
pub use numfield::{Embedding, NumberField, NumberFieldElem};
pub use poly::{Poly, QPoly, ZPoly};
pub use roots::{isolate_real_roots, RealRoot, RootInterval, SturmChain};
pub use spectral::{
    quadratic_unit_circle, spectral_profile, ComplexPair, ModulusSquared, RealRootInfo, RootSign, SpectralProfile,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree {degree} exceeds supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("determinant is {0}, expected +1 or -1")]
    NotUnimodular(String),
    #[error("dimension {0} is not supported here")]
    DimensionUnsupported(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different number fields")]
    IncompatibleFields,
    #[error("{0}")]
    Reducible(String),
    #[error("embedding is not real")]
    NotReal,
}
