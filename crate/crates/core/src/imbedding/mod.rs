//! Imbeddings of regular Hom-Lie triple systems into Z2-graded Lie
//! algebras with automorphism.

pub mod lie;
pub mod standard;
pub mod universal_algebra;
pub mod wedge;

pub use lie::{
    center, check_grading, generated_subalgebra, intertwining_defect, is_tl_morphism, GradedLieWithAut,
    LieWithAut,
};
pub use standard::{build_ghe, imbedding_defect, verify_imbedding, StandardImbedding};
pub use universal_algebra::{build_universal, central_extension_report, check_central_extension, UniversalAlgebra};
pub use wedge::{compute_a_submodule, hdr_wedge_action, wedge_index, WedgeBasis};
