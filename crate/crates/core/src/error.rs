use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field parameters: {0}")]
    InvalidField(String),
    #[error("modulus is not primitive: alpha has order {order}, expected {expected}")]
    NonPrimitivePolynomial { order: u32, expected: u32 },
    #[error("modulus is reducible over GF({p})")]
    ReduciblePolynomial { p: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{q} is not the order of a subfield of GF({p}^{e})")]
    InvalidSubfield { q: u32, p: u32, e: u32 },
    #[error("coefficient {coeff:x} of a minimal polynomial lies outside GF({q})")]
    CoefficientOutsideSubfield { coeff: u32, q: u32 },
    #[error("element is not fixed by the Frobenius power q^{d}")]
    NotFixedByFrobeniusPower { d: u32 },
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("code length {n} does not divide the multiplicative order {order}")]
    BadOrder { n: u32, order: u32 },
    #[error("base-set residues {a} and {b} lie in the same cyclotomic coset")]
    OverlappingCosets { a: u32, b: u32 },
    #[error("generator polynomial has a coefficient outside the base field")]
    GeneratorNotOverSubfield,
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("invalid error pattern: {0}")]
    InvalidPattern(String),
    #[error("syndrome map is not injective: {first} and {second} collide")]
    InjectivityViolated { first: String, second: String },
    #[error("{what} needs {count} items, budget is {limit}")]
    BudgetExceeded { what: &'static str, count: u128, limit: u128 },
    #[error("interpolation points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("homogeneity/symmetry hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("residue {0} lies in the defining set; its syndrome is already known")]
    TargetInDefiningSet(u32),
    #[error("structure theorem violated: {0}")]
    StructureTheoremViolated(String),
    #[error("locator derivative vanishes at the root for position {position}")]
    ZeroDerivativeAtRoot { position: u32 },
    #[error("no artifact covers syndrome residue {0}")]
    MissingArtifact(u32),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
