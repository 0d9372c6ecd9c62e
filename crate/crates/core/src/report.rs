//! Pass/fail verdicts with concrete counterexamples.

use std::fmt;

use crate::linalg::Scalar;

/// A basis index tuple at which an identity fails, with the nonzero defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub defect: Vec<Scalar>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, defect: Vec<Scalar>) -> Self {
        Self { indices, defect }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {:?}, defect [", self.indices)?;
        for (i, x) in self.defect.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

/// Which imbedding equation fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImbeddingViolation {
    /// `eps[a,b,c] != alpha_L [[eps a, eps b], eps c]` at a basis triple.
    Bracket(Witness),
    /// `eps alpha != alpha_L eps` on a basis vector.
    Twist(Witness),
}

impl ImbeddingViolation {
    pub fn witness(&self) -> &Witness {
        match self {
            Self::Bracket(w) | Self::Twist(w) => w,
        }
    }
}

impl fmt::Display for ImbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Bracket(w) => write!(f, "bracket equation fails {w}"),
            Self::Twist(w) => write!(f, "twist equation fails {w}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: &'static str,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub verdicts: Vec<Verdict>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, axiom: &'static str, witness: Option<Witness>) {
        self.verdicts.push(Verdict { axiom, witness });
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(Verdict::passed)
    }

    pub fn get(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    /// First failing verdict, if any.
    pub fn first_failure(&self) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| !v.passed())
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.verdicts.extend(other.verdicts);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.verdicts.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            match &v.witness {
                None => write!(f, "{}: pass", v.axiom)?,
                Some(w) => write!(f, "{}: FAIL {w}", v.axiom)?,
            }
        }
        Ok(())
    }
}
