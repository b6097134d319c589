use thiserror::Error;

/// Errors raised by the library. Messages are stable and are matched on by
/// the command line front end and the tests.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field: p={p}, k={k}")]
    UnsupportedField { p: u64, k: u32 },
    #[error("characteristic 3 has no primitive cube root of unity")]
    CharacteristicThree,
    #[error("field elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular generator: generator {0} is not invertible")]
    SingularGenerator(usize),
    #[error("group too large: closure exceeds {0} elements")]
    GroupTooLarge(usize),
    #[error("invalid group parameters: {0}")]
    InvalidGroup(String),
    #[error("not GL2(3): {0}")]
    NotGl23(String),
    #[error("action not well-defined: {0}")]
    ActionNotWellDefined(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid coset representatives: {0}")]
    InvalidCosetReps(String),
    #[error("action table mismatch: {0}")]
    ActionTableMismatch(String),
    #[error("degree out of range: {0}")]
    DegreeOutOfRange(usize),
    #[error("cohomology instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("conjugation leaves subgroup: {0}")]
    ConjugationLeavesSubgroup(String),
    #[error("averaging unavailable: gcd({order}, {module_size}) != 1")]
    AveragingUnavailable { order: u64, module_size: u64 },
    #[error("not a semidirect decomposition: {0}")]
    NotSemidirect(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("incompatible cohomology groups: {0}")]
    Incompatible(String),
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("singular Mobius transformation")]
    SingularMoebius,
    #[error("derived table disagrees with the reference: {0}")]
    DerivedTableMismatch(String),
    #[error("Galois action incompatible: {0}")]
    GaloisIncompatible(String),
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("point not on curve: {0}")]
    NotOnCurve(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("excluded slope: a^3 = b^3")]
    ExcludedSlope,
    #[error("not a flex line: {0}")]
    NotAFlexLine(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}

pub type Result<T> = std::result::Result<T, Error>;
