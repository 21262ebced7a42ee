//! Explicit realizations: hyperelliptic lattices, Inoue generators and
//! lattices, Kodaira group laws and a parallelizing frame.

pub mod frame;
pub mod hyperelliptic;
pub mod inoue;
pub mod kodaira;

pub use frame::{example3_frame_check, FrameReport};
pub use hyperelliptic::{
    hyperelliptic_lattices, scan_hyperelliptic, verify_hyperelliptic_lattice, HyperellipticLatticeClass, LatticeScan,
};
pub use inoue::{inoue_s0_generators, inoue_spm_solve, AffineGenerator, Complex, S0Report, SpmSolution};
pub use kodaira::{
    kodaira_group_law_check, pythagorean_points, secondary_kodaira_check, secondary_kodaira_symbolic, KodairaLawReport,
    KodairaVariant,
};

use crate::classify::ClassifyError;
use crate::exact::ExactError;

#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(#[from] ExactError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error("({a}, {b}) is not on the unit circle")]
    InvalidPoint { a: String, b: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no integer offsets in [-{range}, {range}] satisfy the lattice conditions")]
    SolverRange { range: i64 },
    #[error("verification failed: {0}")]
    Verification(String),
}
