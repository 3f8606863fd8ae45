//! Three-valued verdicts for bounded checks.
//!
//! Predicates on infinite monoids are decided over a bounded search ball.
//! A check that neither finds a witness nor can certify exhaustion reports
//! `Unknown` together with the bound that was searched, so callers can tell
//! an honest "don't know" from a definite answer.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    True,
    False,
    Unknown { bound: u32 },
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::True
        } else {
            Decision::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Decision::True
    }

    pub fn is_false(self) -> bool {
        self == Decision::False
    }

    pub fn is_unknown(self) -> bool {
        matches!(self, Decision::Unknown { .. })
    }

    /// Conjunction: False dominates, then Unknown, then True.
    pub fn and(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::False, _) | (_, Decision::False) => Decision::False,
            (Decision::Unknown { bound }, _) => Decision::Unknown { bound },
            (_, Decision::Unknown { bound }) => Decision::Unknown { bound },
            _ => Decision::True,
        }
    }

    /// Disjunction: True dominates, then Unknown, then False.
    pub fn or(self, other: Decision) -> Decision {
        match (self, other) {
            (Decision::True, _) | (_, Decision::True) => Decision::True,
            (Decision::Unknown { bound }, _) => Decision::Unknown { bound },
            (_, Decision::Unknown { bound }) => Decision::Unknown { bound },
            _ => Decision::False,
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::True => write!(f, "True"),
            Decision::False => write!(f, "False"),
            Decision::Unknown { bound } => write!(f, "Unknown(bound {bound})"),
        }
    }
}

/// A decision together with an optional human-readable witness or
/// counterexample, for reporting.
#[derive(Clone, Debug)]
pub struct Checked {
    pub decision: Decision,
    pub witness: Option<String>,
}

impl Checked {
    pub fn new(decision: Decision) -> Self {
        Checked {
            decision,
            witness: None,
        }
    }

    pub fn with_witness(decision: Decision, witness: String) -> Self {
        Checked {
            decision,
            witness: Some(witness),
        }
    }
}
