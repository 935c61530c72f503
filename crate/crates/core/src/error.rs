//! Crate-wide error type.
//!
//! Everything here is a *user-visible* failure: bad type strings, budget
//! refusals, malformed words or expressions, and — most importantly —
//! theorem violations, where a verified identity fails on concrete data.
//! Internal invariant breaches panic instead; they are bugs, not errors.

/// Errors produced by group construction, Hecke arithmetic and verification.
#[derive(thiserror::Error, Debug, Clone)]
pub enum Error {
    /// The Cartan type string does not match the `IRR ('x' IRR)*` grammar.
    #[error("invalid Cartan type {input:?}: {reason}")]
    TypeParse { input: String, reason: String },

    /// A syntactically valid letter/rank pair outside the crystallographic list.
    #[error("invalid rank {rank} for type {letter}: {reason}")]
    InvalidRank {
        letter: char,
        rank: usize,
        reason: String,
    },

    /// The Weyl group order exceeds the configured enumeration budget.
    #[error("group order {order} exceeds budget {budget}; raise --max-order or HECKETRACE_MAX_ORDER to proceed")]
    BudgetExceeded { order: String, budget: String },

    /// A generator index outside `1..=rank`.
    #[error("generator index {index} out of range 1..={rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    /// A word string that cannot be parsed into generator indices.
    #[error("cannot parse word {input:?}: {reason}")]
    WordParse { input: String, reason: String },

    /// Two elements (or an element and a group) from different Cartan data.
    #[error("elements belong to different Cartan data; build them from the same parsed type")]
    MixedDatum,

    /// The structure-constant memo table hit its configured size cap.
    #[error("structure-constant cache exceeded its limit of {limit} entries")]
    CacheLimitExceeded { limit: usize },

    /// A Hecke expression failed to parse.
    #[error("expression parse error at byte {position}: {reason}")]
    ExprParse { position: usize, reason: String },

    /// A Laurent polynomial that should lie in Z[q] (after the requested
    /// shift) does not: odd or negative exponents survive.
    #[error("Laurent polynomial is not a polynomial in q after shift {shift}: offending v-exponent {exponent}")]
    NotAQPolynomial { shift: i64, exponent: i64 },

    /// Exact polynomial division left a remainder.
    #[error("inexact polynomial division: {context}")]
    InexactDivision { context: String },

    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZero,

    /// The requested operation only applies to rank <= 2 Weyl types.
    #[error("operation requires a rank <= 2 type (dihedral character model), got {type_spec}")]
    RankTooLarge { type_spec: String },

    /// The group is larger than the brute-force oracle is willing to handle.
    #[error("group order {order} exceeds the oracle budget {budget}")]
    OracleBudgetExceeded { order: usize, budget: usize },

    /// A proved identity failed on concrete data. This is the loud failure
    /// mode for verification sweeps: it carries a printable counterexample.
    #[error("theorem violation in {check}: {witness}")]
    TheoremViolation { check: String, witness: String },

    /// An operation restricted to elliptic elements of minimal length in
    /// their conjugacy class was called on something else.
    #[error("element {word:?} is not elliptic of minimal length in its conjugacy class")]
    NotEllipticMinimal { word: String },

    /// A numeric count was requested at an inadmissible value of q.
    #[error("invalid q = {q}: numeric count reports require an integer q >= 2")]
    InvalidQ { q: String },

    /// An unknown verification suite name.
    #[error("unknown suite {name:?}; expected one of {expected}")]
    UnknownSuite { name: String, expected: String },

    /// Invalid command-line usage not covered by a more specific variant.
    #[error("{message}")]
    Usage { message: String },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
