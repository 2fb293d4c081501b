//! Exact engine for the 0-Hecke modules spanned by standard Young row-strict
//! composition tableaux: construction, quasisymmetric characteristics,
//! decomposition into class submodules, and indecomposability certificates.

pub mod composition;
pub mod endo;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod qsym;
pub mod tableau;

pub use composition::{compositions_of, Cell, Composition, ThreadDecomposition, MAX_SIZE};
pub use endo::{
    certify_with_limit, commutant, is_indecomposable_certified, witness_sequence, Certificate,
    Commutant, EndoReport, Verdict, WitnessData,
};
pub use error::{Result, SyrtError};
pub use hecke::{
    apply_pi, apply_word, build_action, build_action_with_limit, composition_series, is_source,
    Filtration, HeckeAction, Move, PiResult, RelationFailure,
};
pub use tableau::{
    brute_force_syrt, enumerate_syrt, enumerate_syrt_with_limit, equivalence_classes,
    row_superstandard, ColumnSignature, EquivalenceClass, Syrt, Tableau, Violation,
};
pub use qsym::{expand_r_in_f, f_to_m, Basis, QSymElement};
