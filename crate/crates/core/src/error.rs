use thiserror::Error;

/// Error type shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("closure exceeded the cap of {cap} elements; generator set is probably not finite")]
    CapExceeded { cap: usize },

    #[error("the given element set is not a subgroup")]
    NotASubgroup,

    #[error("the given subgroup is not normal")]
    NotNormal,

    #[error("the homomorphism is not surjective")]
    NotSurjective,

    #[error("the twist map is not a homomorphism into an automorphism group of H")]
    InvalidTwist,

    #[error("consecutive homomorphisms are not composable")]
    NotComposable,

    #[error("group of order {order} exceeds the search bound {bound}")]
    SearchBoundExceeded { order: usize, bound: usize },

    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("the chosen elements do not generate the source group")]
    DoesNotGenerate,

    #[error("group table audit failed: {0}")]
    BadTable(String),

    #[error("degenerate valence: phi_{x}({a}) does not lie in 2O")]
    DegenerateValence { x: String, a: String },

    #[error("inadmissible quadruple: offending pair {0}")]
    Inadmissible(String),

    #[error("{label} is not an element of Q")]
    NotInQ { label: String },

    #[error("unknown catalog name: {0}")]
    UnknownName(String),

    #[error("unsupported construction: {0}")]
    Unsupported(String),

    #[error("lex error at byte {offset}: {found}")]
    Lex { offset: usize, found: String },

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("braid syntax error at token {token}")]
    BraidSyntax { token: usize },

    #[error("evaluation error at byte {offset}: {msg}")]
    Eval { offset: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
