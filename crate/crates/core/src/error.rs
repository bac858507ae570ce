use crate::parser::ParseError;
use crate::Complex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("signature ({p},{q}) exceeds the supported dimension n <= {max}")]
    DimensionTooLarge { p: usize, q: usize, max: usize },
    #[error("signature mismatch: ({0},{1}) vs ({2},{3})")]
    SignatureMismatch(usize, usize, usize, usize),
    #[error("grade {k} out of range for n = {n}")]
    GradeOutOfRange { k: usize, n: usize },
    #[error("{op} is not defined for n = {n}")]
    UnsupportedDimension { op: &'static str, n: usize },
    #[error("{op} requires an even multivector")]
    NotEven { op: &'static str },
    #[error("{op} requires a purely even or purely odd multivector")]
    MixedParity { op: &'static str },
    #[error("element is not invertible (|Det| = {abs_det:e} <= {tol:e})")]
    NotInvertible { abs_det: f64, tol: f64 },
    #[error(
        "determinant product is not a scalar (non-scalar residual {residual:e} exceeds {bound:e})"
    )]
    NotScalar { residual: f64, bound: f64 },
    #[error("non-finite coefficient encountered")]
    NonFinite,
    #[error("matrix dimension mismatch: {0} vs {1}")]
    MatrixDimension(usize, usize),
    #[error("negated alternate representation only exists for odd n (n = {0})")]
    NegateEvenDimension(usize),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn not_invertible(det: Complex, tol: f64) -> Self {
        Error::NotInvertible {
            abs_det: det.norm(),
            tol,
        }
    }
}
