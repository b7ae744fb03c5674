//! Exact computations with finite-dimensional Lie superalgebras: graded
//! second cohomology, stem extensions, multipliers and covers, and free
//! nilpotent presentations.

pub mod algebra;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod families;
pub mod freepres;
pub mod hom;
pub mod io;
pub mod linalg;
pub mod scalar;
pub mod subspace;
pub mod superdim;

pub use algebra::{AlgebraBuilder, LieSuperalgebra, Quotient, ValidationReport, Violation};
pub use error::{Error, Result};
pub use hom::HomSpec;
pub use linalg::SparseVec;
pub use scalar::{Field, Scalar};
pub use subspace::{Grading, GradedSubspace};
pub use superdim::{superdim_leq, Parity, SuperDim};
