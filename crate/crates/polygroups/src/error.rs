use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("operation is not associative at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("no catalog for groups of order {0}")]
    UnsupportedOrder(usize),
    #[error("carrier of order {0} exceeds the permutation-search bound")]
    OrderTooLarge(usize),

    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("argument {value} out of range for carrier of order {order}")]
    IndexOutOfRange { value: usize, order: usize },
    #[error("{work} units of work exceed the budget of {budget}")]
    BudgetExceeded { work: u128, budget: u128 },
    #[error("equation (n-1)*x z = x has no unique solution; no skew map exists")]
    MissingSkewMap,
    #[error("retract arity arithmetic failed: need m + r(m-1) = n, got m={m}, r={r}, n={n}")]
    ArityArithmeticMismatch { m: usize, r: usize, n: usize },

    #[error("phi does not fix b")]
    FixedPointViolated,
    #[error("phi^(n-1) differs from conjugation by b at x = {0}")]
    InnerPowerViolated(usize),
    #[error("k-ary base arity {m} is invalid for target arity {n}: need 2 <= m < n with m-1 dividing n-1")]
    DivisibilityViolated { m: usize, n: usize },
    #[error("canonical family parameter constraint violated: {0}")]
    ParamConstraintViolated(String),
    #[error("arity must be odd for this check")]
    EvenArity,
    #[error("arity must be at least 3, got {0}")]
    ArityTooSmall(usize),

    #[error("operations have different shapes: ({n1}, {k1}) vs ({n2}, {k2})")]
    ShapeMismatch { n1: usize, k1: usize, n2: usize, k2: usize },

    #[error("binary retract is not cyclic")]
    NotCyclicBase,
    #[error("no row for (k={k}, l={l}) in the reference tables")]
    RowNotInPaper { k: usize, l: usize },
    #[error("no canonical cyclic form matched; classification invariant broken")]
    NoCanonicalMatch,

    #[error("term algebra requires an abelian base group")]
    NonAbelianBase,
    #[error("independence set contains duplicate element {0}")]
    DuplicateElements(usize),

    #[error("not an n-ary group: {0}")]
    NotNaryGroup(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
