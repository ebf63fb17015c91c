use thiserror::Error;

use crate::taft_hopf::FactorKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root order {0}: n must be at least 2")]
    InvalidOrder(usize),
    #[error("exponent {t} does not give a primitive {n}-th root of unity")]
    InvalidRoot { n: usize, t: usize },
    #[error("operands belong to different cyclotomic contexts")]
    ContextMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is a zero divisor in a quotient ring that is not a field")]
    NotInvertible,
    #[error("denominator (1-w)...(1-w^{k}) vanishes for a primitive {n}-th root")]
    DenominatorVanishes { k: usize, n: usize },
    #[error("tensor factor kinds {found:?} do not match expected {expected:?}")]
    KindMismatch {
        expected: Vec<FactorKind>,
        found: Vec<FactorKind>,
    },
    #[error("tensor arity {0} is outside the supported range 1..=3")]
    ArityOverflow(usize),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("power {s} outside 1..={n}")]
    PowerOutOfRange { s: usize, n: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
