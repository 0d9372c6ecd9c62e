//! Exact computational algebra for Hom-Lie algebras and regular Hom-Lie
//! triple systems, their standard and universal imbeddings into
//! Z2-graded Lie algebras, and the factorization of imbeddings through
//! the universal one.

pub mod corpus;
pub mod derivation;
pub mod error;
pub mod imbedding;
pub mod linalg;
pub mod report;
pub mod structures;
pub mod tensor;
pub mod universal;

pub use error::{Error, Result};
pub use linalg::{Matrix, QuotientSpace, Scalar, Subspace};
pub use report::{AxiomReport, Verdict, Witness};
pub use structures::{HomLieAlgebra, HomLts, RegularHomLts, TwistClass, Twisted};
pub use tensor::{BilinearMap, TrilinearMap};
pub use imbedding::{GradedLieWithAut, LieWithAut, StandardImbedding, UniversalAlgebra};
pub use universal::{construct_phi, UniversalFactorization};
