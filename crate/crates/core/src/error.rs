use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic passed to the field constructor is not prime.
    NotPrime(u64),
    /// The requested field order p^(2e) exceeds the table cap.
    FieldTooLarge {
        p: u64,
        e: u32,
        cap: u64,
    },
    DivisionByZero,
    /// An element does not belong to the field it was used with.
    ContextMismatch,
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    /// A norm preimage was requested for 0 or for an element outside GF(q).
    NotInSubfieldUnits,
    /// A subgroup order that does not divide q² − 1.
    InvalidSubgroupOrder {
        order: u64,
        group: u64,
    },
    RepeatedPoint,
    /// A parameter precondition failed; the message names the violated bound.
    InvalidParams(String),
    /// An exhaustive oracle would exceed its work budget.
    BudgetExceeded {
        needed: u128,
        budget: u128,
    },
    /// An algebraic claim failed on concrete data.
    Falsified(String),
    /// Two independent computations of the same quantity disagree.
    RouteDisagreement(String),
    /// Quantum parameters were requested without passing evidence.
    MissingEvidence(String),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParams(msg.into())
    }

    pub(crate) fn falsified(msg: impl Into<String>) -> Self {
        Error::Falsified(msg.into())
    }

    /// True for errors that signal a failed mathematical check rather than bad input.
    pub fn is_check_failure(&self) -> bool {
        matches!(
            self,
            Error::Falsified(_) | Error::RouteDisagreement(_) | Error::MissingEvidence(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::FieldTooLarge { p, e, cap } => {
                write!(f, "field order {p}^{} exceeds the cap {cap}", 2 * e)
            }
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ContextMismatch => f.write_str("element does not belong to this field"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "length mismatch: expected {expected}, found {found}")
            }
            Error::NotInSubfieldUnits => {
                f.write_str("norm preimage requires a nonzero element of GF(q)")
            }
            Error::InvalidSubgroupOrder { order, group } => {
                write!(f, "subgroup order {order} does not divide {group}")
            }
            Error::RepeatedPoint => f.write_str("evaluation points are not distinct"),
            Error::InvalidParams(msg) => f.write_str(msg),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "work {needed} exceeds budget {budget}")
            }
            Error::Falsified(msg) => write!(f, "check failed: {msg}"),
            Error::RouteDisagreement(msg) => write!(f, "internal error, routes disagree: {msg}"),
            Error::MissingEvidence(msg) => write!(f, "no verification evidence: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
