use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::ElemSet;
use crate::semiring::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Semiring axioms in the order the validator checks them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    AddIdentity,
    AddCommutative,
    AddAssociative,
    MulIdentity,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    ZeroAbsorbing,
    ZeroNeOne,
}

impl Axiom {
    fn identity(self) -> &'static str {
        match self {
            Axiom::AddIdentity => "0 + a = a",
            Axiom::AddCommutative => "a + b = b + a",
            Axiom::AddAssociative => "(a + b) + c = a + (b + c)",
            Axiom::MulIdentity => "1 * a = a",
            Axiom::MulAssociative => "(a * b) * c = a * (b * c)",
            Axiom::LeftDistributive => "a * (b + c) = a * b + a * c",
            Axiom::RightDistributive => "(b + c) * a = b * a + c * a",
            Axiom::ZeroAbsorbing => "0 * a = 0",
            Axiom::ZeroNeOne => "0 != 1",
        }
    }
}

/// A failed axiom with the concrete elements and both sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<u8>,
    pub lhs: u8,
    pub rhs: u8,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["a", "b", "c"];
        write!(f, "{:?} fails: {} at ", self.axiom, self.axiom.identity())?;
        for (k, w) in self.witness.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", names[k.min(2)], w)?;
        }
        write!(f, " (lhs={}, rhs={})", self.lhs, self.rhs)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("axiom violation: {0}")]
    AxiomViolation(Violation),
    #[error("multiplication is not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: Elem, b: Elem },
    #[error("order {0} outside the supported range 2..=16")]
    InvalidOrder(usize),
    #[error("malformed table: {0}")]
    TableShape(String),
    #[error("{table} table entry ({row},{col}) = {value} is out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("order {order} exceeds the exhaustive cap {cap}; pass the override to continue")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("ideals belong to different semirings")]
    CarrierMismatch,
    #[error("{set} is not an ideal: {reason}")]
    NotAnIdeal { set: ElemSet, reason: String },
    #[error("{set} is not a k-ideal: {reason}")]
    NotKIdeal { set: ElemSet, reason: String },
    #[error("{0} is not a proper ideal")]
    NotProper(ElemSet),
    #[error("k-closure of {input} gave {closure}, which is not a k-ideal: {reason}")]
    ClosureNotKIdeal {
        input: ElemSet,
        closure: ElemSet,
        reason: String,
    },
    #[error("primary ideal {ideal} has non-prime radical {radical}: {a}*{b} in radical, neither factor is")]
    RadicalNotPrime {
        ideal: ElemSet,
        radical: ElemSet,
        a: Elem,
        b: Elem,
    },
    #[error("k-irreducible component {component} of {input} is not primary: {x}*{y} in it, {x} not in it, {y} not in its radical {radical}")]
    TheoremViolation {
        input: ElemSet,
        component: ElemSet,
        radical: ElemSet,
        x: Elem,
        y: Elem,
    },
    #[error("intersection {group} of components sharing radical {radical} is not {radical}-primary: {reason}")]
    GroupNotPrimary {
        group: ElemSet,
        radical: ElemSet,
        reason: String,
    },
    #[error("subset search over {candidates} candidates exceeds the budget of {budget} subsets")]
    SearchSpaceTooLarge { candidates: usize, budget: u64 },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("{a} and {b} are not coprime (gcd {gcd})")]
    NotCoprime { a: u64, b: u64, gcd: u64 },
    #[error("step {step} failed: {witness}")]
    StepFailed { step: String, witness: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
