//! Law-violation reports shared by the category, preorder and semigroup validators.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    EmptyName,
    InvalidName,
    DuplicateName,
    UnknownName,
    MissingIdentity,
    IdentityTyping,
    UndefinedComposite,
    ConflictingComposite,
    CompositeTyping,
    MissingComposite,
    IdentityLaw,
    Associativity,
    Reflexivity,
    Transitivity,
    Antisymmetry,
    MissingSum,
    ConflictingSum,
    Positivity,
    Monotonicity,
}

impl ViolationKind {
    pub fn label(self) -> &'static str {
        match self {
            ViolationKind::EmptyName => "empty name",
            ViolationKind::InvalidName => "invalid name",
            ViolationKind::DuplicateName => "duplicate name",
            ViolationKind::UnknownName => "unknown name",
            ViolationKind::MissingIdentity => "missing identity",
            ViolationKind::IdentityTyping => "identity typing",
            ViolationKind::UndefinedComposite => "undefined composite",
            ViolationKind::ConflictingComposite => "conflicting composite",
            ViolationKind::CompositeTyping => "composite typing",
            ViolationKind::MissingComposite => "missing composite",
            ViolationKind::IdentityLaw => "identity law",
            ViolationKind::Associativity => "associativity",
            ViolationKind::Reflexivity => "reflexivity",
            ViolationKind::Transitivity => "transitivity",
            ViolationKind::Antisymmetry => "antisymmetry",
            ViolationKind::MissingSum => "missing sum",
            ViolationKind::ConflictingSum => "conflicting sum",
            ViolationKind::Positivity => "positivity",
            ViolationKind::Monotonicity => "monotonicity",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

impl Violation {
    pub fn new(kind: ViolationKind, message: impl Into<String>) -> Self {
        Violation {
            kind,
            message: message.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)
    }
}

/// Outcome of a validator: empty when every law holds.
///
/// Violations are listed in the order the validator discovered them, which is
/// fixed by declaration order of the input, so the same input always produces
/// the same list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    pub(crate) fn push(&mut self, kind: ViolationKind, message: impl Into<String>) {
        self.violations.push(Violation::new(kind, message));
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "  {v}")?;
        }
        Ok(())
    }
}
