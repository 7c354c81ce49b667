//! Exact decision procedures for Archimedean-type conditions on finite
//! categories, together with their specializations to preorders (thin
//! categories) and finite partially ordered semigroups.
//!
//! * [`category`]: finite categories as validated composition tables.
//! * [`arrow`]: the arrow category, commuting squares, unitary equivalence
//!   and submorphisms.
//! * [`archimedean`]: `ℕv` closures, bounded classes and the two deciders.
//! * [`thin`]: preorders, their closed-form characterizations and the
//!   exhaustive sweeps comparing them with the generic deciders.
//! * [`semigroup`]: ordered semigroups and the exhaustive sweep relating the
//!   bounded-multiples and unit conditions on total orders.

pub mod archimedean;
pub mod arrow;
pub mod category;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod semigroup;
pub mod thin;
pub mod validation;

pub use archimedean::{
    is_archimedean_bounded, is_archimedean_composition, is_bounded_class, nv_closure,
    unit_equivalents, Analysis, ArchReport, ArchStats, NvClosure,
};
pub use arrow::{
    build_arrow_category, is_commuting_square, is_submorphism, is_unitary_equivalent,
    ArrowCategory, Decision, IsoWitness, Square, SubmorphismWitness,
};
pub use category::{
    validate_category, CategoryData, FiniteCategory, MorphismDecl, MorphismId, ObjectId,
};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use semigroup::{
    validate_semigroup, verify_lemma1, BoundRange, LemmaReport, MultipleSet, OrderedSemigroup,
    Refutation, SemigroupData,
};
pub use thin::{
    enumerate_preorders, equiv_classes, is_bounded_preorder, is_discrete, submorphism_thin,
    to_category, unitary_equiv_thin, validate_preorder, verify_prop1, verify_prop2, BoundWitness,
    EquivClasses, Preorder, PreorderData, PropReport,
};
pub use validation::{Validation, Violation, ViolationKind};
