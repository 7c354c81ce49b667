use thiserror::Error;

use crate::validation::Validation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    /// `g ∘ f` was requested but `cod(f) != dom(g)`.
    #[error("cannot compose `{g}` after `{f}`: cod({f}) = `{cod_f}` but dom({g}) = `{dom_g}`")]
    NotComposable {
        g: String,
        f: String,
        cod_f: String,
        dom_g: String,
    },
    /// One side of a candidate square does not fit between its source and target.
    #[error("square side `{side}` is mistyped: {detail}")]
    SquareTyping { side: &'static str, detail: String },
    #[error("invalid category:\n{0}")]
    InvalidCategory(Validation),
    #[error("invalid preorder:\n{0}")]
    InvalidPreorder(Validation),
    #[error("invalid ordered semigroup:\n{0}")]
    InvalidSemigroup(Validation),
    #[error("`({0}, {1})` is not a pair of the relation")]
    NotInRelation(String, String),
    #[error("size {size} exceeds the enumeration cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("size must be at least 1")]
    EmptySize,
}
