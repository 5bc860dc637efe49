use std::fmt;

/// Why a Cayley table was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableDefect {
    Empty,
    NotSquare { row: usize, len: usize, expected: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize },
    RowNotPermutation { row: usize },
    ColumnNotPermutation { col: usize },
    NoIdentity,
    NoInverse { element: usize },
    NotAssociative { a: usize, b: usize, c: usize },
}

impl fmt::Display for TableDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableDefect::Empty => write!(f, "empty table"),
            TableDefect::NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            TableDefect::EntryOutOfRange { row, col, value } => {
                write!(f, "entry {value} at ({row}, {col}) is out of range")
            }
            TableDefect::RowNotPermutation { row } => write!(f, "row {row} is not a permutation"),
            TableDefect::ColumnNotPermutation { col } => {
                write!(f, "column {col} is not a permutation")
            }
            TableDefect::NoIdentity => write!(f, "no identity element"),
            TableDefect::NoInverse { element } => write!(f, "element {element} has no two-sided inverse"),
            TableDefect::NotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(TableDefect),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: usize },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group order is not odd")]
    NotOddOrder,
    #[error("group is trivial")]
    TrivialGroup,
    #[error("quotient is elementary abelian")]
    IsElementaryAbelian,
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("backtracking budget of {budget} nodes exceeded; partial result discarded")]
    BudgetExceeded { budget: u64 },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrices do not commute")]
    NotCommuting,
    #[error("matrix group order is not coprime to {p}")]
    NotCoprime { p: u64 },
    #[error("action is not irreducible on the block")]
    NotIrreducible,
    #[error("coefficient sum is congruent to 1 mod {p}")]
    ConditionViolated { p: u64 },
    #[error("no central solution: {0}")]
    NoCentralSolution(String),
    #[error("central system has no solution")]
    NoSolution,
    #[error("central system has {count} solutions")]
    NonUniqueSolution { count: usize },
    #[error("quotient is not elementary abelian: {0}")]
    NotElementaryAbelian(String),
    #[error("action is not coprime: {0}")]
    ActionNotCoprime(String),
    #[error("action is trivial")]
    TrivialAction,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("map is not trivial on the intersection")]
    NotTrivialOnIntersection,
    #[error("map does not commute with the conjugation action")]
    DoesNotCommuteWithAction,
    #[error("extension is not well defined")]
    NotWellDefined,
    #[error("normal subgroup has exponent 2")]
    ExponentTwo,
    #[error("certificate check failed: {0}")]
    CertificateInvalid(String),
    #[error("derived list differs from reference: {0}")]
    RuleSetIncomplete(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
