//! Burau-representation algebra for the three-string braid group, local
//! Alexander-module classification, coset enumeration of universal subgroups
//! and the exceptional-factor search over finite fields.

pub mod algebra;
pub mod burau;
pub mod freegroup;
pub mod localgeom;
pub mod search;
pub mod skeleton;
pub mod universal;
pub mod verify;

pub use algebra::{parse_poly, AlgebraError, FpPoly, IntPoly, Ring, RingDescriptor, RingElem};
pub use burau::{burau_of_word, specialize, BraidWord, BurauMat, Mat2};
pub use freegroup::{artin_apply, psi, tilde_class, FreeWord, ModuleVec};
pub use localgeom::{
    classify_monovalent_black, classify_monovalent_white, classify_trivalent, distance_equation,
    CharMode, Subspace, Vec2, VertexClass, VertexKind,
};
pub use search::{
    candidate_search, classify_candidates, kappa_filter, n79_check, CandidateTriple, KappaReport,
    SearchOptions, Verdict,
};
pub use skeleton::{Signature, Skeleton};
pub use universal::{
    enumerate_universal, line_orbit_conjugacy, six_significant_check, CosetTable, EnumerationTask,
    Mode, UniversalError,
};
