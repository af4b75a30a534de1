use thiserror::Error;

/// Errors raised by the exact, linear-algebra, curve and Lie-algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("substitution makes the denominator vanish identically")]
    DegenerateSubstitution,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("non-catalog matrix: {0}")]
    NonCatalogMatrix(String),
    #[error("condition is not linear in the unknowns: {0}")]
    Nonlinear(String),
    #[error("spectrum not symmetric under s -> -s, so A is not conjugate into sp(4)")]
    AsymmetricSpectrum,
    #[error("minimal and characteristic polynomials differ")]
    Derogatory,
    #[error("base point is not admissible")]
    Inadmissible,
    #[error("compatible symplectic form not unique: solution space has dimension {0}")]
    SigmaDimension(usize),
    #[error("label {0} belongs to the rational normal class; use classify")]
    RationalNormalLabel(String),
    #[error("singular Möbius map (ad - bc = 0)")]
    SingularMobius,
    #[error("degenerate transformation: {0}")]
    DegenerateTransformation(String),
    #[error("already in Laguerre-Forsyth form (c2 = 0)")]
    AlreadyLaguerreForsyth,
    #[error("branch point: {0}")]
    BranchPoint(String),
    #[error("jet order {0} exceeds the supported maximum")]
    JetOrder(usize),
    #[error("degenerate symplectic form")]
    DegenerateForm,
    #[error("g0 is not closed under the bracket")]
    NotClosed,
    #[error("not a derivation: {0}")]
    NotDerivation(String),
    #[error("unsupported depth {0} (only depth <= 2 is implemented)")]
    UnsupportedDepth(usize),
    #[error("Jacobi identity fails for basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
