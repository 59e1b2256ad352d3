use std::fmt;

use serde::Serialize;

/// Which law a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    Typing,
    MissingEntry,
    LeftIdentity,
    RightIdentity,
    Associativity,
    Functoriality,
    Naturality,
    UnitCoherence,
    Invertibility,
    Pentagon,
    Triangle,
    Hexagon,
    Symmetry,
    UnitLaw,
    Splitting,
    Section,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::Typing => "typing",
            Law::MissingEntry => "missing-entry",
            Law::LeftIdentity => "left-identity",
            Law::RightIdentity => "right-identity",
            Law::Associativity => "associativity",
            Law::Functoriality => "functoriality",
            Law::Naturality => "naturality",
            Law::UnitCoherence => "unit-coherence",
            Law::Invertibility => "invertibility",
            Law::Pentagon => "pentagon",
            Law::Triangle => "triangle",
            Law::Hexagon => "hexagon",
            Law::Symmetry => "symmetry",
            Law::UnitLaw => "unit-law",
            Law::Splitting => "splitting",
            Law::Section => "section",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    pub message: String,
}

/// Every violated law found by a validator, in discovery order.
///
/// An empty report means the structure satisfies all of its laws.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, law: Law, message: impl Into<String>) {
        self.violations.push(Violation {
            law,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(crate::Error::Law(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("no violations");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}] {}", v.law, v.message)?;
        }
        Ok(())
    }
}
