use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid algebra parameters m={m}, d={d}: {reason}")]
    Parameter { m: u32, d: u32, reason: String },

    #[error("algebra too large: {what} = {value} exceeds limit {limit}")]
    SizeCap {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("elements belong to different algebras: Cl^(1/{m1})_{d1} vs Cl^(1/{m2})_{d2}")]
    ContextMismatch { m1: u32, d1: u32, m2: u32, d2: u32 },

    #[error("invalid exponent tuple: {0}")]
    Exponents(String),

    #[error("grade {grade} out of range 0..={max}")]
    GradeOutOfRange { grade: i64, max: u32 },

    #[error("residue {residue} out of range 0..{m}")]
    ResidueOutOfRange { residue: i64, m: u32 },

    #[error("element is singular: |Det| = {det_abs:e}")]
    Singular { det_abs: f64 },

    #[error("matrix is singular (pivot {pivot:e})")]
    SingularMatrix { pivot: f64 },

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("operation requires {required}, got Cl^(1/{m})_{d}")]
    WrongContext {
        required: &'static str,
        m: u32,
        d: u32,
    },

    #[error("invalid JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
