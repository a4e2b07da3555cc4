use thiserror::Error;

/// Failure modes shared across the whole engine.
///
/// Several "errors" in the geometric pipeline are ordinary answers
/// (a point sitting outside the domain of a rational map, say) rather
/// than bugs; callers that care about the distinction match on the
/// variant.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element is not invertible")]
    NonInvertible,
    #[error("operands belong to different fields: {0}")]
    FieldMismatch(String),
    #[error("the two lines are projectively identical")]
    IdenticalLines,
    #[error("arrangement contains duplicate lines ({0}, {1})")]
    DuplicateLines(usize, usize),
    #[error("frame quadruple is not in general position")]
    NonGenericFrame,
    #[error("labeled operator degenerate at slot {slot}: {detail}")]
    DegenerateOperator { slot: usize, detail: String },
    #[error("family formulas degenerate at this point")]
    DegenerateRealization,
    #[error("point lies in the indeterminacy locus")]
    IndeterminacyPoint,
    #[error("no lift to the double cover over this field")]
    NoLift,
    #[error("linear solve for x1 is degenerate at this point")]
    LinearSolveDegenerate,
    #[error("chart is singular here (implicit-variable partial vanishes)")]
    ChartSingular,
    #[error("operation exceeds its budget: {0}")]
    BudgetExceeded(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error("discriminant only supported for degree 2 in the chosen variable (got {0})")]
    UnsupportedDegree(usize),
    #[error("unknown verification case `{0}`")]
    UnknownCase(String),
}

pub type Result<T> = std::result::Result<T, Error>;
