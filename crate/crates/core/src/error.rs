use std::fmt;

use thiserror::Error;

/// Ring and module axioms checked by the exhaustive table scan, in scan order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    AdditiveAssociativity,
    AdditiveCommutativity,
    AdditiveIdentity,
    AdditiveInverse,
    MultiplicativeIdentity,
    MultiplicativeAssociativity,
    Distributivity,
    MultiplicativeCommutativity,
    UnitalAction,
    ScalarAdditivity,
    VectorAdditivity,
    ActionCompatibility,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::AdditiveAssociativity => "additive associativity",
            Axiom::AdditiveCommutativity => "additive commutativity",
            Axiom::AdditiveIdentity => "additive identity",
            Axiom::AdditiveInverse => "additive inverse",
            Axiom::MultiplicativeIdentity => "multiplicative identity",
            Axiom::MultiplicativeAssociativity => "multiplicative associativity",
            Axiom::Distributivity => "distributivity",
            Axiom::MultiplicativeCommutativity => "multiplicative commutativity",
            Axiom::UnitalAction => "unital action",
            Axiom::ScalarAdditivity => "(r+s)m = rm+sm",
            Axiom::VectorAdditivity => "r(m+n) = rm+rn",
            Axiom::ActionCompatibility => "(rs)m = r(sm)",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cyclic ring needs n >= 2, got {0}")]
    BadModulus(usize),
    #[error("carrier of size {size} exceeds the size limit {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("ring axiom violated: {axiom} at ({a}, {b}, {c})")]
    RingAxiom {
        axiom: Axiom,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("module axiom violated: {axiom} at (r={r}, s={s}, m={m}, n={n})")]
    ModuleAxiom {
        axiom: Axiom,
        r: usize,
        s: usize,
        m: usize,
        n: usize,
    },
    #[error("element {index} out of range for a carrier of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("subset does not live on this carrier")]
    CarrierMismatch,
    #[error("expected {expected}, got {found}")]
    KindMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("product needs at least one factor")]
    EmptyProduct,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("grading has {found} components but the group has {expected} elements")]
    ComponentCount { expected: usize, found: usize },
    #[error("component of degree {degree} does not contain zero")]
    MissingZero { degree: usize },
    #[error("component of degree {degree} is not an additive subgroup: {a} + {b} escapes")]
    NotSubgroup { degree: usize, a: usize, b: usize },
    #[error(
        "not a direct sum: component sizes multiply to {product}, carrier has {size} elements{}",
        missing.map(|m| format!(" (element {m} not reached)")).unwrap_or_default()
    )]
    DirectSum {
        product: usize,
        size: usize,
        missing: Option<usize>,
    },
    #[error("degree compatibility fails: {a} (degree {g}) times {b} (degree {h}) leaves degree {gh}")]
    Compatibility {
        g: usize,
        h: usize,
        gh: usize,
        a: usize,
        b: usize,
    },
    #[error("identity element is not in the identity-degree component")]
    IdentityNotInBase,
    #[error("grading groups differ between ring and module")]
    GroupMismatch,
    #[error("{0}")]
    Unsupported(String),
    #[error("subset is not graded: element {witness} has a component outside it")]
    NotGraded { witness: usize },
    #[error("computed radical is not closed under the ideal operations")]
    RadicalNotIdeal,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("submodule equals the whole module; a proper submodule is required")]
    ImproperSubmodule,
    #[error("component of degree {degree} equals the whole component")]
    ImproperComponent { degree: usize },
    #[error("identity component of the ideal is the whole base ring")]
    ImproperIdeal,
    #[error("degree {0} is not an element of the grading group")]
    BadDegree(usize),
    #[error("expected an ideal, got a submodule")]
    NotAnIdeal,
    #[error(transparent)]
    Grading(#[from] GradingError),
}

impl From<AlgebraError> for PredicateError {
    fn from(e: AlgebraError) -> Self {
        PredicateError::Grading(GradingError::Algebra(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("multiplicative set element {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("multiplicative set is not closed: {a} * {b} = {product} is missing")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("multiplicative set does not contain the identity")]
    MissingOne,
    #[error("modules live over different graded rings")]
    RingMismatch,
    #[error("product of submodules needs a multiplication module: {0}")]
    NotMultiplication(String),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

impl From<AlgebraError> for ConstructionError {
    fn from(e: AlgebraError) -> Self {
        ConstructionError::Grading(GradingError::Algebra(e))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("claim {claim} needs an instance with {component}")]
    MissingExtra { claim: String, component: &'static str },
    #[error(transparent)]
    Predicate(#[from] PredicateError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("building corpus: {0}")]
    Corpus(#[from] GradingError),
    #[error("evaluating {claim} on {instance}: {source}")]
    Claim {
        claim: String,
        instance: String,
        source: ClaimError,
    },
    #[error("engine integrity: witness for {claim} on {instance} does not reproduce")]
    Integrity { claim: String, instance: String },
    #[error("thread pool: {0}")]
    Pool(String),
}
